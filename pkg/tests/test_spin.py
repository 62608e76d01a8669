import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from affcrystal import spin
from affcrystal.cartan import cartan_matrix, eps_to_lambda



def _order_key(n, x):
    return x if x > 0 else 2 * n + 1 + x


def _valid_by_definition(n, t):
    if [_order_key(n, x) for x in t] != sorted(_order_key(n, x) for x in t):
        return False
    if len(set(t)) != n:
        return False
    for k, p in enumerate(t, start=1):
        if p > 0 and -p in t:
            l = t.index(-p) + 1
            if k + (n - l + 1) > p:
                return False
    return True


def _brute_enumeration(n):
    letters = list(range(1, n + 1)) + list(range(-n, 0))
    return [t for t in itertools.combinations(sorted(letters, key=lambda x: _order_key(n, x)), n)
            if _valid_by_definition(n, t)]


def _signature_f(n, k, t):
    """Tensor-product signature rule on the top-to-bottom reading word (classical k)."""
    def plus(x):
        return (x == k or x == -(k + 1)) if k < n else x == n

    def minus(x):
        return (x == -k or x == k + 1) if k < n else x == -n

    stack = []
    for pos, x in enumerate(t):
        sign = "+" if plus(x) else "-" if minus(x) else None
        if sign is None:
            continue
        if stack and stack[-1][0] == "+" and sign == "-":
            stack.pop()
        else:
            stack.append((sign, pos))
    free = [p for s, p in stack if s == "+"]
    if not free:
        return None
    p = free[0]
    x = t[p]
    new = (k + 1 if x == k else -k) if k < n else -n
    return t[:p] + (new,) + t[p + 1:]


def _catalan(k):
    c = [1]
    for m in range(1, k + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[k]


@pytest.mark.parametrize("n", range(2, 7))
def test_enumeration_matches_brute_force_and_dimension(n):
    got = spin.enumerate_crystal(n)
    assert sorted(got) == sorted(_brute_enumeration(n))
    assert len(got) == comb(2 * n, n) - comb(2 * n, n - 2)
    assert spin.dimension(n) == len(got)


def test_validity_examples():
    assert spin.is_valid(2, (1, 2))
    assert spin.is_valid(2, (2, -2))
    assert not spin.is_valid(2, (1, -1))
    assert not spin.is_valid(2, (2, 1))


def test_n2_elements_in_order():
    assert spin.enumerate_crystal(2) == [(1, 2), (1, -2), (2, -2), (2, -1), (-2, -1)]


def test_weights():
    n = 4
    top = tuple(range(1, n + 1))
    assert spin.weight_eps(n, top) == (1,) * n
    assert spin.weight_eps(n, tuple(range(-n, 0))) == (-1,) * n
    assert spin.weight_eps(2, (2, -2)) == (0, 0)
    # (1,...,n) has the weight of Lambda_n - Lambda_0
    assert spin.weight(n, top) == (-1, 0, 0, 0, 1)


def test_operator_examples():
    assert spin.e_tilde(2, 0, (1, 2)) == (2, -1)
    assert spin.f_tilde(2, 2, (1, 2)) == (1, -2)
    assert spin.f_tilde(3, 1, (1, 2, 3)) is None


@pytest.mark.parametrize("n", range(2, 7))
def test_classical_operators_match_signature_rule(n):
    for t in spin.enumerate_crystal(n):
        for k in range(1, n + 1):
            assert spin.f_tilde(n, k, t) == _signature_f(n, k, t)


@pytest.mark.parametrize("n", range(2, 7))
def test_partial_inverse_and_weight_shift(n):
    alpha = cartan_matrix("Cn1", n).root
    for t in spin.enumerate_crystal(n):
        for k in range(n + 1):
            s = spin.f_tilde(n, k, t)
            if s is not None:
                assert spin.is_valid(n, s)
                assert spin.e_tilde(n, k, s) == t
                assert spin.weight(n, s) == tuple(a - b for a, b in zip(spin.weight(n, t), alpha(k)))
            u = spin.e_tilde(n, k, t)
            if u is not None:
                assert spin.f_tilde(n, k, u) == t


@pytest.mark.parametrize("n", range(2, 7))
def test_catalan_law(n):
    weights = {spin.weight_eps(n, t) for t in spin.enumerate_crystal(n)}
    for mu in weights:
        m = sum(1 for v in mu if v)
        assert spin.brute_multiplicity(n, mu) == _catalan((n - m) // 2)
        assert spin.weight_multiplicity(n, mu) == _catalan((n - m) // 2)


def test_multiplicity_examples():
    assert spin.weight_multiplicity(8, (0, 0, 1, 0, 0, 0, -1, 0)) == 5
    assert spin.weight_multiplicity(2, (1, 1)) == 1
    assert spin.weight_multiplicity(4, (0, 0, 0, 0)) == 2
    assert spin.weight_multiplicity(3, (2, 0, 0)) == 0
    assert set(spin.tableaux_of_weight(4, (0,) * 4)) == {(3, 4, -4, -3), (2, 4, -4, -2)}


# the five diagrams on nodes 1,2,4,5,6,8 with singles 3 and 7-bar, arcs by position
PICTURED = [
    (((1, 2), (3, 4), (5, 6)), (2, 3, 5, 8, -8, -7, -5, -2)),
    (((1, 4), (2, 3), (5, 6)), (3, 4, 5, 8, -8, -7, -5, -4)),
    (((1, 2), (3, 6), (4, 5)), (2, 3, 6, 8, -8, -7, -6, -2)),
    (((1, 6), (2, 3), (4, 5)), (3, 4, 6, 8, -8, -7, -6, -4)),
    (((1, 6), (2, 5), (3, 4)), (3, 5, 6, 8, -8, -7, -6, -5)),
]
NODES = (1, 2, 4, 5, 6, 8)


@pytest.mark.parametrize("arcs,tableau", PICTURED)
def test_pictured_arc_diagrams(arcs, tableau):
    d = spin.ArcDiagram(NODES, arcs)
    assert spin.arcs_to_tableau(8, (3, -7), d) == tableau
    singles, back = spin.tableau_to_arcs(8, tableau)
    assert set(singles) == {3, -7}
    assert back == d


def test_pictured_set_is_the_whole_weight_space():
    mu = (0, 0, 1, 0, 0, 0, -1, 0)
    assert set(spin.tableaux_of_weight(8, mu)) == {t for _, t in PICTURED}


def test_arc_examples_in_value_form():
    d = spin.ArcDiagram.from_values(NODES, [(1, 2), (4, 5), (6, 8)])
    assert spin.arcs_to_tableau(8, (3, -7), d) == (2, 3, 5, 8, -8, -7, -5, -2)


def test_crossing_arcs_rejected():
    with pytest.raises(spin.InvalidArcs):
        spin.arcs_to_tableau(8, (3, -7), spin.ArcDiagram(NODES, ((1, 3), (2, 5), (4, 6))))


@given(st.integers(2, 6), st.data())
def test_arc_round_trip(n, data):
    t = data.draw(st.sampled_from(spin.enumerate_crystal(n)))
    singles, d = spin.tableau_to_arcs(n, t)
    assert spin.arcs_to_tableau(n, singles, d) == t


def test_dot_export_lists_every_edge():
    dot = spin.to_dot(3)
    edges = sum(1 for t in spin.enumerate_crystal(3) for k in range(4)
                if spin.f_tilde(3, k, t) is not None)
    assert dot.count("->") == edges
    assert dot.startswith("digraph")


def test_weight_lambda_view():
    assert eps_to_lambda(spin.weight_eps(3, (1, 2, 3)), 1) == (0, 0, 0, 1)
