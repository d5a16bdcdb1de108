from fractions import Fraction
from math import comb

import pytest

from gr1n.cherednik import norm, z_weight
from gr1n.combinatorics import MultiPartition, syt_enumerate
from gr1n.errors import TruncationExceeded
from gr1n.oracle import ALL_CHECKS, TruncatedModule, generic_point, verify_suite
from gr1n.scalars import Cyclotomic, ParamPoint
from oracles import RelationModule, as_cyclotomic

F = Fraction
ROW2 = MultiPartition.of((2,))


def row2_module(kappa=F(3, 2), c0=F(1, 7), maxdeg=3):
    return TruncatedModule(ROW2, ParamPoint(1, kappa, c0, (0,)), maxdeg)


def test_z1_degree_one():
    m = row2_module()
    k, c = m.point.kappa, m.point.c0
    x1, x2 = ((1, 0), 0), ((0, 1), 0)
    assert m.z(1, {x1: F(1)}) == {x1: 2 * k - c, x2: -c}
    assert m.z(1, {x2: F(1)}) == {x2: k}


def test_gram_degree_one():
    m = row2_module()
    k, c = m.point.kappa, m.point.c0
    x1, x2 = ((1, 0), 0), ((0, 1), 0)
    G, idx = m.gram_block(1), m.index(1)
    assert G[idx[x1]][idx[x1]] == G[idx[x2]][idx[x2]] == k - c
    assert G[idx[x1]][idx[x2]] == G[idx[x2]][idx[x1]] == c


def test_eigenvector_f10():
    m = row2_module()
    k, c = m.point.kappa, m.point.c0
    f = m.joint_eigenbasis(1)[((1, 0), 0)]
    assert f == {((1, 0), 0): 1, ((0, 1), 0): -c / (k - c)}


def test_apply_zeta_scales_by_residue():
    shape = MultiPartition.of((1,), (1,))
    m = TruncatedModule(shape, ParamPoint(2, 1, F(1, 5), (F(1, 3), F(-1, 3))), 2)
    for mu in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]:
        for t in range(m.rep.dim):
            out = m.apply_zeta(1, {(mu, t): F(1)})
            exp = m.rep.beta(t, 1) - mu[0]
            assert out == {(mu, t): Cyclotomic.zeta(2, exp)}


def test_truncation_exceeded():
    m = row2_module(maxdeg=1)
    with pytest.raises(TruncationExceeded):
        m.apply_x(1, {((1, 0), 0): F(1)})


@pytest.mark.parametrize("shape", [MultiPartition.of((2, 1)), MultiPartition.of((1,), (1,)),
                                   MultiPartition.of((1,), (), (1,)), MultiPartition.of((2,), (1,))], ids=str)
def test_basis_size(shape):
    m = TruncatedModule(shape, generic_point(shape, 1), 3)
    dim = len(syt_enumerate(shape))
    for d in range(4):
        assert m.dim(d) == comb(d + shape.n - 1, shape.n - 1) * dim


CASES = [
    MultiPartition.of((2,)),
    MultiPartition.of((1,), (1,)),
    MultiPartition.of((1,), (), (1, 1)),
    MultiPartition.of((2, 1)),
]


@pytest.mark.parametrize("shape", CASES, ids=str)
def test_y_matches_relation_route(shape):
    p = generic_point(shape, 2)
    m = TruncatedModule(shape, p, 3)
    rel = RelationModule(m.rep, p)
    for d in range(1, 4):
        for mu, t in m.basis(d):
            for i in range(1, shape.n + 1):
                a = as_cyclotomic(m.apply_y(i, {(mu, t): F(1)}), shape.r)
                b = rel.y(i, {(mu, t): Cyclotomic.rational(shape.r, 1)})
                assert a == b, (mu, t, i)


@pytest.mark.parametrize("shape", CASES, ids=str)
def test_verify_suite_generic(shape):
    m = TruncatedModule(shape, generic_point(shape, 5), 3)
    rep = verify_suite(m)
    bad = [c for c in rep["checks"] if c["status"] == "fail"]
    assert rep["all_pass"] and not bad, bad
    assert {c["check"] for c in rep["checks"]} == set(ALL_CHECKS)


def test_verify_orthogonality_small():
    shape = MultiPartition.of((1,), (1,))
    m = TruncatedModule(shape, generic_point(shape, 6), 2)
    rep = verify_suite(m, checks=("orthogonality", "norm"))
    assert rep["all_pass"]


def test_norms_match_form_on_eigenvectors():
    shape = MultiPartition.of((2, 1))
    p = generic_point(shape, 8)
    m = TruncatedModule(shape, p, 3)
    gram = m.gram_blocks(3)
    tabs = syt_enumerate(shape)
    for d in range(4):
        for (mu, t), f in m.joint_eigenbasis(d).items():
            assert m.form(f, f, gram) == norm(mu, tabs[t]).evaluate(p) * m.rep.gamma[t]


def test_weights_match_closed_form():
    shape = MultiPartition.of((1,), (1, 1))
    p = generic_point(shape, 9)
    m = TruncatedModule(shape, p, 2)
    tabs = syt_enumerate(shape)
    for d in range(3):
        for mu, t in m.joint_eigenbasis(d):
            alphas, res = z_weight(mu, tabs[t]).evaluate(p)
            assert m.weight((mu, t)) == alphas
            assert tuple(x % shape.r for x in res) == m.twisted_residues((mu, t))


def test_generic_point_is_deterministic():
    shape = MultiPartition.of((2,), (1,))
    assert generic_point(shape, 3) == generic_point(shape, 3)
    assert generic_point(shape, 3, kappa_one=True).kappa == 1
