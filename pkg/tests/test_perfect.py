import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from affcrystal import perfect as P

HAND_RELATIONS = {
    2: lambda b: b[1, 1] == b[2, 2] + b[2, 3] and b[2, 4] == b[1, 2] + b[1, 3],
    3: lambda b: (b[1, 1] == b[3, 3] + b[3, 4] + b[3, 5]
                  and b[3, 6] == b[1, 2] + b[1, 3] + b[1, 4]
                  and b[2, 2] == b[3, 3] + b[3, 4] and b[2, 5] == b[1, 3] + b[1, 4]),
}


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def brute_level(n, level):
    """Independent oracle: rows as compositions of l, then relations and interleaving."""
    found = []
    for rows in itertools.product(list(compositions(level, n + 1)), repeat=n):
        b = {(i + 1, i + 1 + j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        if not HAND_RELATIONS[n](b):
            continue
        ok = all(
            sum(b[i, j] for j in range(i, t + 1)) >= sum(b.get((i + 1, j), 0) for j in range(i + 1, t + 2))
            for i in range(1, n) for t in range(1, n + 2))
        if ok:
            found.append(tuple(b[ij] for ij in P.index_set(n)))
    return sorted(found)


def el(n, level=None, **kw):
    return P.PcElement.from_dict(n, level, {k[1:]: v for k, v in kw.items()})


def test_membership_examples():
    assert P.is_element(2, None, P.zero(2))
    assert P.is_element(2, None, el(2, b11=1, b23=1, b13=-1, b24=-1).b)
    assert not P.is_element(2, 1, P.zero(2).b)
    assert not P.is_element(2, None, (0,) * 5)


def test_operator_examples_at_zero():
    assert P.f_tilde(0, P.zero(2)) == el(2, b11=1, b24=-1, b23=1, b13=-1)
    assert P.f_tilde(1, P.zero(2)) == el(2, b11=-1, b12=1, b23=-1, b24=1)
    assert P.e_tilde(1, P.zero(3)) == el(3, b12=-1, b11=1, b36=-1, b35=1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_zero_has_vanishing_data(n):
    z = P.zero(n)
    assert P.eps_weight(z) == P.phi_weight(z) == P.wt_vector(z) == (0,) * (n + 1)


@pytest.mark.parametrize("n,level,count", [(2, 1, 4), (2, 2, 10), (3, 1, 8), (3, 2, 35)])
def test_enumeration_matches_brute_force_and_closure(n, level, count):
    # [DERIVED] counts frozen from the oracle above
    scan = P.enumerate_level(n, level)
    assert sorted(x.b for x in scan) == brute_level(n, level)
    assert len(scan) == count
    assert set(P.enumerate_by_closure(n, level)) == set(scan)


@pytest.mark.parametrize("n,level", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
def test_local_axioms_on_level(n, level):
    for b in P.enumerate_level(n, level):
        assert P.local_violations(b) == []
        assert P.level_of(P.eps_weight(b)) >= level


@pytest.mark.parametrize("n", [2, 3, 4])
def test_local_axioms_on_infinity(n):
    rng = random.Random(7 * n)
    for _ in range(400):
        b = P.random_infinity(n, rng)
        assert P.is_element(n, None, b)
        assert P.local_violations(b) == []
        for k in range(n + 1):
            assert P.f_tilde(k, b) is not None and P.e_tilde(k, b) is not None


def test_dominant_weights_oracle():
    for n in (2, 3, 4):
        marks = P.comarks(n)
        for level in (1, 2, 3):
            want = sorted(w for w in itertools.product(range(level + 1), repeat=n + 1)
                          if sum(a * x for a, x in zip(marks, w)) == level)
            assert list(P.dominant_weights(n, level)) == want


@pytest.mark.parametrize("n,level", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2)])
def test_minimal_elements_biject_onto_dominant_weights(n, level):
    mins = P.minimal_elements(n, level)
    target = set(P.dominant_weights(n, level))
    for weight in (P.eps_weight, P.phi_weight):
        images = [weight(b) for b in mins]
        assert len(set(images)) == len(images)
        assert set(images) == target


@settings(max_examples=50)
@given(st.sampled_from([2, 3, 4]), st.data())
def test_json_round_trip(n, data):
    size = len(P.free_params(P.zero(n)))
    params = data.draw(st.lists(st.integers(-30, 30), min_size=size, max_size=size))
    b = P.from_free(n, params)
    assert P.free_params(b) == tuple(params)
    assert P.PcElement.from_json(b.to_json()) == b
    assert json.loads(b.to_json())["level"] is None


def test_level_guard_returns_none():
    lowest = P.enumerate_level(2, 1)
    undefined = [(k, b) for b in lowest for k in range(3) if P.f_tilde(k, b) is None]
    assert undefined
    for k, b in undefined:
        assert P.phi(k, b) == 0


def test_dot_output_has_every_edge():
    els = P.enumerate_level(2, 1)
    dot = P.to_dot(els)
    assert dot.count("->") == len(P.crystal_edges(els))


def test_bounds_and_rank_errors():
    with pytest.raises(P.BoundsExceeded):
        P.enumerate_level(2, 0)
    with pytest.raises(P.BoundsExceeded):
        P.enumerate_level(2, P.MAX_ENUM_LEVEL + 1)
    with pytest.raises(ValueError):
        P.zero(5)
    with pytest.raises(P.InvalidElement):
        P.check_element(P.PcElement(2, 1, (0,) * 6))
