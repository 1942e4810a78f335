import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gitfan.quiver import QuiverError, euler_form, subdim_vectors, validate_quiver, weight_of


def test_a2_is_valid(a2):
    assert a2.vertices == ("x", "y")
    assert a2.topological_order == ("x", "y")


@pytest.mark.parametrize(
    "vertices, arrows",
    [
        (["x"], [("a", "x", "x")]),
        (["x", "y"], [("a", "x", "y"), ("b", "y", "x")]),
        (["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")]),
    ],
)
def test_oriented_cycles_rejected(vertices, arrows):
    with pytest.raises(QuiverError, match="oriented cycle"):
        validate_quiver(vertices, arrows)


def test_duplicate_vertex_and_undeclared_endpoint():
    with pytest.raises(QuiverError, match="duplicate vertex"):
        validate_quiver(["x", "x"], [])
    with pytest.raises(QuiverError, match="'z'"):
        validate_quiver(["x", "y"], [("a", "x", "z")])


def test_multi_arrows_allowed(k2):
    assert len(k2.arrows) == 2


def test_euler_form_examples(a2, k2, square):
    assert euler_form(a2, (1, 0), (0, 1)) == -1
    assert euler_form(k2, (1, 1), (1, 1)) == 0
    for Q in (a2, k2, square):
        for v in Q.vertices:
            e = Q.simple(v)
            assert euler_form(Q, e, e) == 1


def test_euler_form_domain_mismatch(a2):
    with pytest.raises(QuiverError):
        euler_form(a2, (1, 0, 0), (0, 1))


def test_euler_form_bilinear_exhaustive(s2):
    vecs = list(itertools.product(range(4), repeat=3))
    fixed = [(1, 2, 0), (3, 0, 1), (2, 2, 2)]
    for a, a2_ in itertools.product(vecs[::7], vecs[::11]):
        s = tuple(x + y for x, y in zip(a, a2_))
        for b in fixed:
            assert euler_form(s2, s, b) == euler_form(s2, a, b) + euler_form(s2, a2_, b)
            assert euler_form(s2, b, s) == euler_form(s2, b, a) + euler_form(s2, b, a2_)


@pytest.mark.parametrize(
    "sigma, beta, value",
    [((1, -1), (1, 1), 0), ((1, 0, -1), (1, 1, 1), 0), ((2, -1), (1, 1), 1)],
)
def test_weight_of(sigma, beta, value):
    assert weight_of(sigma, beta) == value


@given(
    st.lists(st.fractions(max_denominator=9), min_size=3, max_size=3),
    st.lists(st.integers(0, 5), min_size=3, max_size=3),
    st.lists(st.integers(0, 5), min_size=3, max_size=3),
)
def test_weight_of_additive(sigma, b1, b2):
    total = [x + y for x, y in zip(b1, b2)]
    assert weight_of(sigma, total) == weight_of(sigma, b1) + weight_of(sigma, b2)


@pytest.mark.parametrize("beta, count", [((1, 1), 4), ((2, 2), 9), ((0, 0), 1), ((1, 2, 0), 6)])
def test_subdim_vectors(beta, count):
    out = subdim_vectors(beta)
    assert len(out) == count
    assert out[0] == tuple(0 for _ in beta) and out[-1] == beta
    assert all(u < v for u, v in zip(out, out[1:]))


def test_dimvector_rejects_negative(a2):
    with pytest.raises(QuiverError, match="negative dimension"):
        a2.dimvector({"x": -1, "y": 0})
    assert a2.weight({"x": "1/2", "y": -1}) == (Fraction(1, 2), Fraction(-1))


@st.composite
def small_digraphs(draw):
    n = draw(st.integers(1, 4))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=6))
    return n, edges


@given(small_digraphs())
def test_valid_iff_topological_order_exists(graph):
    n, edges = graph
    verts = [f"v{i}" for i in range(n)]
    arrows = [(f"a{k}", verts[t], verts[h]) for k, (t, h) in enumerate(edges)]
    acyclic = any(
        all(perm.index(t) < perm.index(h) for t, h in edges)
        for perm in itertools.permutations(range(n))
    )
    if acyclic:
        Q = validate_quiver(verts, arrows)
        pos = {v: i for i, v in enumerate(Q.topological_order)}
        assert all(pos[a.tail] < pos[a.head] for a in Q.arrows)
    else:
        with pytest.raises(QuiverError):
            validate_quiver(verts, arrows)
