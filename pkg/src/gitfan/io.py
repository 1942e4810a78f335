"""Instance files, report documents and command dispatch.

Instances and reports are JSON documents carrying ``"format": 1``.
Rational weights are written as strings (``"1/2"``) so nothing passes
through floating point.  Reports contain no wall-clock data unless timing is
requested, which keeps repeated runs byte-identical.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .cones import Cone, cone_from_hrep
from .fan import Fan, Mode, git_cone, git_equivalent, git_fan, verify_fan, wall_system
from .genrep import effective_cone, stable_decomposition
from .linalg import is_prime
from .quiver import Quiver, QuiverError, validate_quiver
from .reps import Rep, make_rep, orbit_cone, random_rep

FORMAT = 1
COMMANDS = ("effective-cone", "walls", "git-cone", "orbit-cone", "fan", "verify", "equivalent", "decompose")

_TOP_KEYS = {"format", "vertices", "arrows", "beta", "weights", "config", "representations"}
_CONFIG_KEYS = {"mode", "p", "samples", "seed", "budget", "bound_B"}


class InstanceError(ValueError):
    """Malformed instance document (syntax or semantics)."""


class CommandError(ValueError):
    """Bad command or missing option."""


@dataclass
class Instance:
    quiver: Quiver
    beta: tuple[int, ...]
    weights: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    config: dict[str, Any] = field(default_factory=dict)
    representations: dict[str, Rep] = field(default_factory=dict)

    def mode(self, **overrides: Any) -> Mode:
        cfg = {**self.config, **{k: v for k, v in overrides.items() if v is not None}}
        kind = cfg.get("mode", "oracle")
        p = cfg.get("p", 2 if kind == "oracle" else 1009)
        kwargs = {k: cfg[k] for k in ("samples", "seed", "budget") if k in cfg}
        return Mode(kind, p, **kwargs)


def _rational(text: Any) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise InstanceError(f"weight entry {text!r} must be an integer or a 'p/q' string")
    try:
        return Fraction(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InstanceError(f"weight entry {text!r} is not a rational number") from None


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InstanceError("instance must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise InstanceError(f"unknown keys: {sorted(unknown)}")
    if doc.get("format", FORMAT) != FORMAT:
        raise InstanceError(f"unsupported format {doc.get('format')!r}")
    for key in ("vertices", "arrows", "beta"):
        if key not in doc:
            raise InstanceError(f"missing key {key!r}")
    try:
        Q = validate_quiver(doc["vertices"], doc["arrows"])
    except (KeyError, TypeError) as exc:
        raise InstanceError(f"malformed arrow record: {exc}") from None
    except QuiverError as exc:
        raise InstanceError(str(exc)) from None
    try:
        beta = Q.dimvector(doc["beta"])
        weights = {}
        for name, w in (doc.get("weights") or {}).items():
            if not isinstance(w, Mapping):
                raise InstanceError(f"weight {name!r} must map vertices to rationals")
            weights[name] = Q.weight({k: _rational(v) for k, v in w.items()})
    except QuiverError as exc:
        raise InstanceError(str(exc)) from None

    config = dict(doc.get("config") or {})
    bad = set(config) - _CONFIG_KEYS
    if bad:
        raise InstanceError(f"unknown config keys: {sorted(bad)}")
    if config.get("mode", "oracle") not in ("oracle", "sampled"):
        raise InstanceError(f"unknown mode {config['mode']!r}")
    if "p" in config and not (isinstance(config["p"], int) and is_prime(config["p"])):
        raise InstanceError(f"field size {config['p']!r} is not prime")

    reps = {}
    for name, r in (doc.get("representations") or {}).items():
        p = r.get("p", config.get("p", 2))
        if not is_prime(p):
            raise InstanceError(f"field size {p!r} is not prime")
        try:
            reps[name] = make_rep(Q, beta, p, r["matrices"])
        except (KeyError, ValueError) as exc:
            raise InstanceError(f"representation {name!r}: {exc}") from None
    return Instance(Q, beta, weights, config, reps)


def weight_str(sigma: tuple[Fraction, ...]) -> list[str]:
    return [str(Fraction(s)) for s in sigma]


def emit_instance(inst: Instance) -> dict:
    Q = inst.quiver
    doc: dict[str, Any] = {
        "format": FORMAT,
        "vertices": list(Q.vertices),
        "arrows": [{"id": a.id, "tail": a.tail, "head": a.head} for a in Q.arrows],
        "beta": {v: b for v, b in zip(Q.vertices, inst.beta)},
    }
    if inst.weights:
        doc["weights"] = {n: dict(zip(Q.vertices, weight_str(w))) for n, w in sorted(inst.weights.items())}
    if inst.config:
        doc["config"] = {k: inst.config[k] for k in sorted(inst.config)}
    if inst.representations:
        doc["representations"] = {
            n: {"p": r.p, "matrices": {a.id: [list(row) for row in m] for a, m in zip(Q.arrows, r.matrices)}}
            for n, r in sorted(inst.representations.items())
        }
    return doc


def emit_cone(C: Cone) -> dict:
    return {
        "dim": C.dim,
        "ambient_dim": C.ambient_dim,
        "rays": [list(r) for r in C.rays],
        "lineality": [list(l) for l in C.lineality],
        "equations": [list(e) for e in C.equations],
        "inequalities": [list(a) for a in C.inequalities],
    }


def parse_cone(doc: Mapping) -> Cone:
    return cone_from_hrep(doc["ambient_dim"], doc.get("equations", []), doc.get("inequalities", []))


def emit_fan(F: Fan) -> dict:
    return {
        "cones": [emit_cone(C) for C in F.cones],
        "face_relations": [list(r) for r in sorted(F.face_relations)],
        "maximal": list(F.maximal_indices),
    }


def parse_fan(doc: Mapping) -> Fan:
    cones = tuple(parse_cone(c) for c in doc["cones"])
    return Fan(cones, frozenset(tuple(r) for r in doc["face_relations"]), tuple(doc["maximal"]))


def _weight(inst: Instance, names: list[str] | None, count: int = 1) -> list[tuple[Fraction, ...]]:
    names = names or []
    if len(names) < count:
        raise CommandError(f"this command needs {count} --weight option(s)")
    out = []
    for n in names[:count]:
        if n not in inst.weights:
            raise CommandError(f"unknown weight {n!r}")
        out.append(inst.weights[n])
    return out


def run_command(
    inst: Instance,
    command: str,
    weights: list[str] | None = None,
    rep: str | None = None,
    timing: bool = False,
    **mode_overrides: Any,
) -> dict:
    """Dispatch ``command`` and return the report document."""
    if command not in COMMANDS:
        raise CommandError(f"unknown command {command!r}")
    Q, beta = inst.quiver, inst.beta
    mode = inst.mode(**mode_overrides)
    bound = int(inst.config.get("bound_B", 4))
    checks: list[dict] = []
    start = time.perf_counter()

    if command == "effective-cone":
        result: Any = emit_cone(effective_cone(Q, beta))
    elif command == "walls":
        ws = wall_system(Q, beta)
        result = {
            "support": emit_cone(ws.support),
            "classes": [
                {
                    "normal": list(c.normal),
                    "members": [list(m) for m in c.members],
                    "kind": c.kind,
                    "embeds": c.embeds,
                }
                for c in ws.classes
            ],
        }
    elif command == "git-cone":
        (sigma,) = _weight(inst, weights)
        rec = git_cone(Q, beta, sigma, mode)
        result = {
            "weight": weight_str(sigma),
            "cone": emit_cone(rec.cone),
            "d_sigma": [list(d) for d in sorted(rec.d_sigma)],
        }
    elif command == "orbit-cone":
        if rep is not None:
            if rep not in inst.representations:
                raise CommandError(f"unknown representation {rep!r}")
            W = inst.representations[rep]
        else:
            W = random_rep(Q, beta, mode.p, mode.seed)
        result = {
            "representation": {a.id: [list(r) for r in m] for a, m in zip(Q.arrows, W.matrices)},
            "p": W.p,
            "cone": emit_cone(orbit_cone(W, mode.budget)),
        }
    elif command == "fan":
        result = emit_fan(git_fan(Q, beta, mode))
    elif command == "verify":
        fan = git_fan(Q, beta, mode)
        report = verify_fan(Q, beta, fan, mode, bound=bound, seed=mode.seed)
        result = {"fan": emit_fan(fan), "ok": report.ok}
        checks = [{"name": c.name, "pass": c.passed, "detail": c.detail} for c in report.checks]
    elif command == "equivalent":
        s1, s2 = _weight(inst, weights, 2)
        result = {
            "weights": [weight_str(s1), weight_str(s2)],
            "equivalent": git_equivalent(Q, beta, s1, s2, mode),
        }
    else:  # decompose
        (sigma,) = _weight(inst, weights)
        dec = stable_decomposition(Q, beta, sigma)
        result = {
            "weight": weight_str(sigma),
            "parts": [{"multiplicity": m, "dimension": list(g)} for m, g in dec.parts],
        }

    return {
        "format": FORMAT,
        "instance": emit_instance(inst),
        "command": command,
        "mode": mode.describe(),
        "result": result,
        "checks": checks,
        "timing": {"seconds": round(time.perf_counter() - start, 3)} if timing else None,
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
