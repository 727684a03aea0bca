import json

import numpy as np
import pytest

from hughesptr import TriPoly, evaluate_grid, field_ctx, variables
from conftest import random_elements


def random_poly(ctx, rng, n_terms=8, max_exp=None):
    if max_exp is None:
        max_exp = 3 * ctx.Q
    terms = {}
    for _ in range(n_terms):
        exps = tuple(int(v) for v in rng.integers(0, max_exp + 1, 3))
        terms[exps] = ctx.element_from_index(int(rng.integers(1, ctx.Q)))
    return TriPoly(ctx, terms)


def test_ring_identities(ctx9):
    X, Y, Z = variables(ctx9)
    P = X * Y + Z
    assert P * TriPoly.one(ctx9) == P
    assert P**0 == TriPoly.one(ctx9)
    assert (X + Y) * (X - Y) == X * X - Y * Y


def test_zero_purging(ctx9):
    X, _, _ = variables(ctx9)
    assert (X - X).terms == {}
    assert (X - X).degree_profile() == (0, 0, 0, 0)
    # scalar zero wipes everything
    assert X.scale(ctx9.zero).terms == {}


def test_mul_commutative_associative_monomials(ctx9):
    # monomial basis of total degree <= 2, exhaustive triples
    basis = []
    for i in range(3):
        for j in range(3 - i):
            for k in range(3 - i - j):
                basis.append(TriPoly.monomial(ctx9, ctx9.element_from_index(2), (i, j, k)))
    for a in basis:
        for b in basis:
            assert a * b == b * a
            for c in basis[::3]:
                assert (a * b) * c == a * (b * c)


def test_mul_associative_random(ctx9):
    rng = np.random.default_rng(11)
    for _ in range(25):
        a, b, c = (random_poly(ctx9, rng, 4, max_exp=6) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_reduce_folds_q_power(ctx9):
    Q = ctx9.Q
    X, Y, _ = variables(ctx9)
    assert TriPoly.monomial(ctx9, ctx9.one, (Q, 0, 0)).reduce() == X
    # (Y^q - Y)^q folds to -(Y^q - Y)
    tq = TriPoly(ctx9, {(0, ctx9.q, 0): ctx9.one, (0, 1, 0): -ctx9.one})
    assert (tq**ctx9.q).reduce() == -tq


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1)])
def test_tq_power_folding_rule(p, e):
    # tq^(j(q-1)+i) reduces to (-1)^j tq^i for 0 <= j <= q, 1 <= i <= q
    ctx = field_ctx(p, e)
    q = ctx.q
    tq = TriPoly(ctx, {(0, q, 0): ctx.one, (0, 1, 0): -ctx.one})
    powers = [TriPoly.one(ctx)]
    for _ in range(q * (q - 1) + q):
        powers.append(powers[-1] * tq)
    for j in range(q + 1):
        for i in range(1, q + 1):
            lhs = powers[j * (q - 1) + i].reduce()
            rhs = powers[i].reduce()
            if j % 2:
                rhs = -rhs
            assert lhs == rhs, (j, i)


def test_evaluate_basics(ctx9):
    X, Y, Z = variables(ctx9)
    P = X * Y + Z
    for x, y, z in zip(*(random_elements(ctx9, 10, seed=s) for s in (1, 2, 3))):
        assert P.evaluate(x, y, z) == x * y + z
    c = ctx9.element_from_index(7)
    const = TriPoly.constant(ctx9, c)
    assert const.evaluate(*random_elements(ctx9, 3, seed=4)) == c


def test_reduce_preserves_evaluation(ctx9):
    rng = np.random.default_rng(23)
    for trial in range(200):
        P = random_poly(ctx9, rng)
        R = P.reduce()
        assert R.is_reduced
        assert np.array_equal(evaluate_grid(P), evaluate_grid(R))
        assert R.reduce() == R  # idempotent
        # spot-check the grids against scalar evaluation
        if trial % 40 == 0:
            for x, y, z in zip(*(random_elements(ctx9, 3, seed=trial + s) for s in (1, 2, 3))):
                assert P.evaluate(x, y, z) == R.evaluate(x, y, z)
                assert evaluate_grid(P)[x.index, y.index, z.index] == P.evaluate(x, y, z).index


def test_evaluate_grid_matches_scalar_exhaustively(ctx9):
    rng = np.random.default_rng(31)
    els = ctx9.enumerate_field()
    for _ in range(5):
        P = random_poly(ctx9, rng, n_terms=6)
        grid = evaluate_grid(P)
        for x in els:
            for y in els:
                for z in els:
                    assert grid[x.index, y.index, z.index] == P.evaluate(x, y, z).index


def test_equal_reduced(ctx9):
    X, Y, Z = variables(ctx9)
    P = X * Y + Z
    assert P.equal_reduced(P)
    unreduced = TriPoly.monomial(ctx9, ctx9.one, (ctx9.Q, 0, 0))
    with pytest.raises(ValueError):
        unreduced.equal_reduced(X)
    with pytest.raises(ValueError):
        X.equal_reduced(unreduced)


def test_degree_profile(ctx9):
    X, Y, Z = variables(ctx9)
    assert (X * Y + Z).degree_profile() == (1, 1, 1, 2)
    assert TriPoly.zero(ctx9).degree_profile() == (0, 0, 0, 0)


def test_context_mismatch(ctx9, ctx25):
    with pytest.raises(ValueError):
        variables(ctx9)[0] + variables(ctx25)[0]


def test_json_round_trip(ctx9):
    rng = np.random.default_rng(47)
    P = random_poly(ctx9, rng)
    data = P.to_json_dict()
    assert data["p"] == 3 and data["e"] == 1
    exps = [(t["ex"], t["ey"], t["ez"]) for t in data["terms"]]
    assert exps == sorted(exps)
    again = TriPoly.from_json_dict(json.loads(json.dumps(data)))
    assert again == P
    # byte stability
    assert json.dumps(P.to_json_dict()) == json.dumps(again.to_json_dict())


def test_negative_exponent_rejected(ctx9):
    with pytest.raises(ValueError):
        TriPoly.monomial(ctx9, ctx9.one, (-1, 0, 0))
    with pytest.raises(ValueError):
        variables(ctx9)[0] ** -2
