"""Both cochain complexes: differentials, matrices, dimensions.

The dense routes in _oracles recompute everything the sparse machinery
produces, from independent transcriptions of the printed formulas.
"""

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from _oracles import (
    ce_delta1_adjoint,
    ce_delta2_adjoint,
    dense_delta_matrix,
    dense_rank,
)
from zinbiel import (
    Cochain,
    builtin,
    ce_delta,
    ce_delta_matrix,
    ce_space_dim,
    cochain_to_vector,
    cohomology_dims,
    dl_delta,
    dl_delta_lowdeg,
    dl_delta_matrix,
    dl_space_dim,
    perturbed_b2,
    random_dl_cochain,
    regular,
    vector_to_cochain,
)
from zinbiel.complexes import DL_MAX_DEGREE, ce_tuples, dl_tuples
from zinbiel.sparsevec import to_dense
from zinbiel.tensor_bridge import TensorContext

CATALOG = ("B2", "B3", "polyzinbiel(2)", "leibniz2", "lie2", "freeleibniz(2,2)")
ZINBIEL_CATALOG = ("B2", "B3", "polyzinbiel(2)", "polyzinbiel(3)")

# Second cohomology of B2 with regular coefficients: the worked example.
B2_EXPECTED = {"dim_C": 8, "dim_Z": 3, "dim_B": 2, "dim_H": 1}

# lie2 with adjoint coefficients is rigid: everything vanishes.
LIE2_ADJOINT = {0: (2, 0, 0, 0), 1: (4, 2, 2, 0), 2: (2, 2, 2, 0)}


def seeded_cochains(algebra_name, per_degree=3, seed_base=100):
    alg = builtin(algebra_name)
    mod = regular(alg)
    out = []
    for degree in (1, 2, 3):
        for t in range(per_degree):
            rng = Random(seed_base + 10 * degree + t)
            out.append((mod, random_dl_cochain(alg.dim, mod.dim, degree, rng)))
    return out


def test_low_degree_transcription_agrees_everywhere():
    total = 0
    for name in CATALOG:
        for mod, f in seeded_cochains(name):
            lhs = dl_delta(f, mod)
            rhs = dl_delta_lowdeg(f, mod)
            assert lhs.values == rhs.values, (name, f.degree)
            total += 1
    assert total == 54


def test_worked_example_dims_by_dense_route():
    mod = regular(builtin("B2"))
    d1 = dense_delta_matrix(mod, 1, dl_delta_lowdeg)
    d2 = dense_delta_matrix(mod, 2, dl_delta_lowdeg)
    rank1, rank2 = dense_rank(d1), dense_rank(d2)
    assert (rank1, rank2) == (2, 5)
    dim_c = dl_space_dim(2, 2, 2)
    assert dim_c == B2_EXPECTED["dim_C"]
    assert dim_c - rank2 == B2_EXPECTED["dim_Z"]
    assert rank1 == B2_EXPECTED["dim_B"]

    dims = cohomology_dims(mod, "dl", 2)
    assert dims.dim_cochains == B2_EXPECTED["dim_C"]
    assert dims.dim_cocycles == B2_EXPECTED["dim_Z"]
    assert dims.dim_coboundaries == B2_EXPECTED["dim_B"]
    assert dims.dim_cohomology == B2_EXPECTED["dim_H"]


@pytest.mark.parametrize("name", CATALOG)
def test_dl_matrix_matches_application(name):
    alg = builtin(name)
    mod = regular(alg)
    for degree in (1, 2):
        mat = dl_delta_matrix(mod, degree)
        rng = Random(7 + degree)
        f = random_dl_cochain(alg.dim, mod.dim, degree, rng)
        via_matrix = mat.mul_vec(to_dense(cochain_to_vector(f), mat.ncols))
        direct = to_dense(cochain_to_vector(dl_delta(f, mod)), mat.nrows)
        assert via_matrix == direct


@pytest.mark.parametrize("name", ZINBIEL_CATALOG)
def test_dl_delta_squares_to_zero(name):
    mod = regular(builtin(name))
    for n in (1, 2):
        a = dl_delta_matrix(mod, n + 1)
        b = dl_delta_matrix(mod, n)
        assert a.mul(b).is_zero(), (name, n)


def test_dl_delta_square_detects_non_zinbiel():
    # the vanishing of the square is equivalent to the right identity,
    # so the perturbed product must break it
    mod = regular(perturbed_b2())
    assert not dl_delta_matrix(mod, 2).mul(dl_delta_matrix(mod, 1)).is_zero()
    assert not dl_delta_matrix(mod, 3).mul(dl_delta_matrix(mod, 2)).is_zero()


def _cochain_from_pairs(pairs, dim, mdim):
    values = {k: {m: Fraction(v) for m, v in vec.items()} for k, vec in pairs.items()}
    return Cochain("ce", 2, dim, mdim, values)


def test_ce_degree1_matches_printed_formula():
    alg = builtin("lie2")
    mod = regular(alg)
    rng = Random(3)
    f_table = {
        i: {m: Fraction(rng.randint(-9, 9)) for m in range(2)} for i in range(2)
    }
    f = Cochain("ce", 1, 2, 2, {(i,): dict(v) for i, v in f_table.items()})
    got = ce_delta(f, mod)
    want = ce_delta1_adjoint(alg.products, 2, f_table)
    for key, vec in want.items():
        assert got.values.get(key, {}) == vec


def test_ce_degree2_matches_printed_formula():
    for name in ("lie2",):
        alg = builtin(name)
        mod = regular(alg)
        dim = alg.dim
        rng = Random(5)
        pairs = {
            key: {m: Fraction(rng.randint(-9, 9)) for m in range(dim)}
            for key in ce_tuples(dim, 2)
        }
        f = _cochain_from_pairs(pairs, dim, dim)
        got = ce_delta(f, mod)
        want = ce_delta2_adjoint(alg.products, dim, pairs)
        for key, vec in want.items():
            assert got.values.get(key, {}) == vec, key


def test_ce_degree2_matches_printed_formula_on_tensor_algebra():
    ctx = TensorContext(builtin("leibniz2"), builtin("B2"), regular(builtin("B2")))
    lie = ctx.lie
    rng = Random(11)
    pairs = {
        key: {m: Fraction(rng.randint(-9, 9)) for m in range(lie.dim)}
        for key in ce_tuples(lie.dim, 2)
    }
    f = _cochain_from_pairs(pairs, lie.dim, lie.dim)
    got = ce_delta(f, ctx.module)
    want = ce_delta2_adjoint(lie.products, lie.dim, pairs)
    for key, vec in want.items():
        assert got.values.get(key, {}) == vec, key


def test_ce_delta_squares_to_zero_lie2():
    mod = regular(builtin("lie2"))
    mats = {n: ce_delta_matrix(mod, n) for n in range(4)}
    for n in (0, 1, 2):
        assert mats[n + 1].mul(mats[n]).is_zero()


def test_ce_matrix_matches_application():
    mod = regular(builtin("lie2"))
    rng = Random(9)
    pairs = {
        key: {m: Fraction(rng.randint(-9, 9)) for m in range(2)}
        for key in ce_tuples(2, 2)
    }
    f = _cochain_from_pairs(pairs, 2, 2)
    mat = ce_delta_matrix(mod, 2)
    assert mat.mul_vec(to_dense(cochain_to_vector(f), mat.ncols)) == \
        to_dense(cochain_to_vector(ce_delta(f, mod)), mat.nrows)


def test_lie2_adjoint_dims_frozen():
    mod = regular(builtin("lie2"))
    for degree, (c, z, b, h) in LIE2_ADJOINT.items():
        dims = cohomology_dims(mod, "ce", degree)
        assert (dims.dim_cochains, dims.dim_cocycles,
                dims.dim_coboundaries, dims.dim_cohomology) == (c, z, b, h)


def test_ce_evaluation_is_alternating():
    mod = regular(builtin("lie2"))
    rng = Random(13)
    pairs = {
        key: {m: Fraction(rng.randint(-9, 9)) for m in range(2)}
        for key in ce_tuples(2, 2)
    }
    f = _cochain_from_pairs(pairs, 2, 2)
    assert f.evaluate((0, 0)) == {}
    straight = f.evaluate((0, 1))
    swapped = f.evaluate((1, 0))
    assert swapped == {m: -v for m, v in straight.items()}


def test_ce_cochain_rejects_repeated_indices():
    with pytest.raises(ValueError):
        Cochain("ce", 2, 2, 2, {(0, 0): {0: Fraction(1)}})
    with pytest.raises(ValueError):
        Cochain("ce", 2, 2, 2, {(1, 0): {0: Fraction(1)}})


def test_space_dims():
    assert dl_space_dim(2, 2, 3) == 16
    assert ce_space_dim(4, 4, 2) == 24
    assert ce_space_dim(4, 4, 0) == 4
    assert len(list(dl_tuples(2, 3))) == 8
    assert len(list(ce_tuples(4, 2))) == 6


def test_degree_caps():
    mod = regular(builtin("B2"))
    with pytest.raises(ValueError):
        dl_delta_matrix(mod, 0)
    with pytest.raises(ValueError):
        dl_delta_matrix(mod, DL_MAX_DEGREE + 1)
    # per-call override lifts the cap
    assert dl_delta_matrix(mod, DL_MAX_DEGREE + 1, max_degree=9).ncols == \
        dl_space_dim(2, 2, DL_MAX_DEGREE + 1)
    with pytest.raises(ValueError):
        cohomology_dims(mod, "ce", -1)
    with pytest.raises(ValueError):
        cohomology_dims(mod, "hochschild", 1)


def test_random_cochain_is_seed_stable():
    a = random_dl_cochain(2, 2, 2, Random(42))
    b = random_dl_cochain(2, 2, 2, Random(42))
    assert a.values == b.values
    flat = [c for vec in a.values.values() for c in vec.values()]
    assert all(-9 <= c <= 9 for c in flat)


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_vector_roundtrip(seed, bd, md, degree):
    f = random_dl_cochain(bd, md, degree, Random(seed))
    vec = cochain_to_vector(f)
    dim = dl_space_dim(bd, md, degree)
    assert all(0 <= i < dim for i in vec)
    back = vector_to_cochain(vec, "dl", degree, bd, md)
    assert back.values == f.values


@settings(deadline=None, max_examples=20)
@given(st.integers(0, 10_000))
def test_delta_is_linear(seed):
    mod = regular(builtin("B3"))
    rng = Random(seed)
    f = random_dl_cochain(3, 3, 2, rng)
    g = random_dl_cochain(3, 3, 2, rng)
    lhs = dl_delta(f.add(g.scale(Fraction(3))), mod)
    rhs = dl_delta(f, mod).add(dl_delta(g, mod).scale(Fraction(3)))
    assert lhs.values == rhs.values
