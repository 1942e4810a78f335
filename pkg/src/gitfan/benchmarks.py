"""The small quivers used throughout the tests and demos."""

from __future__ import annotations

from .quiver import Quiver, validate_quiver


def a2() -> Quiver:
    return validate_quiver(["x", "y"], [("a", "x", "y")])


def kronecker() -> Quiver:
    return validate_quiver(["x", "y"], [("a", "x", "y"), ("b", "x", "y")])


def s2() -> Quiver:
    """Two arrows into a common sink: x -> z <- y."""
    return validate_quiver(["x", "y", "z"], [("a", "x", "z"), ("b", "y", "z")])


def a3() -> Quiver:
    return validate_quiver(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z")])


def square() -> Quiver:
    return validate_quiver(
        ["x", "y", "z", "w"],
        [("a", "x", "z"), ("b", "x", "w"), ("c", "y", "z"), ("d", "y", "w")],
    )


BENCHMARKS: dict[str, tuple] = {
    "A2": (a2, (1, 1)),
    "K2": (kronecker, (1, 1)),
    "K2-22": (kronecker, (2, 2)),
    "S2": (s2, (1, 1, 1)),
    "A3": (a3, (1, 1, 1)),
    "Square": (square, (1, 1, 1, 1)),
}


def benchmark(name: str) -> tuple[Quiver, tuple[int, ...]]:
    make, beta = BENCHMARKS[name]
    return make(), beta
