"""Tensor products that turn a Leibniz algebra and a Zinbiel algebra into a Lie algebra.

For a Leibniz algebra g and a Zinbiel algebra B, the space g (x) B carries the
bracket

    (a (x) b) * (a' (x) b') = [a, a'] (x) (b . b') - [a', a] (x) (b' . b),

which is antisymmetric by construction and satisfies Jacobi whenever the input
axioms hold. A bimodule M over B extends this to a left action of g (x) B on
g (x) M by the same two-term pattern, using the bimodule's two actions.

The map psi sends a degree-n cochain f on B (valued in M) to the alternating
cochain

    psi(f)(a_1 (x) b_1, ..., a_n (x) b_n)
        = sum over permutations s of sign(s) *
          [a_{s(1)}, ..., a_{s(n)}] (x) f(b_{s(1)}, ..., b_{s(n)}),

with left-normed brackets. It intertwines the two differentials; this module
verifies that numerically on seeded random cochains, and computes the rank
bookkeeping that compares the two cohomologies through the quotient complex.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from .algebras import AxiomReport, Bimodule, FiniteAlgebra, check_axioms
from .complexes import (
    CE_MAX_DEGREE,
    DL_MAX_DEGREE,
    Cochain,
    _dl_rank,
    ce_delta,
    ce_delta_matrix,
    ce_space_dim,
    ce_tuples,
    dl_delta,
    dl_delta_matrix,
    dl_space_dim,
    random_dl_cochain,
)
from .linalg import Matrix, format_scalar
from .shuffles import permutation_sign
from .sparsevec import Vec, add_scaled

BRACKET_BOUND_CAP = 16


def flatten_index(g_idx: int, b_idx: int, b_dim: int) -> int:
    return g_idx * b_dim + b_idx

def unflatten_index(idx: int, b_dim: int) -> Tuple[int, int]:
    return divmod(idx, b_dim)


def _tensor_names(left: Sequence[str], right: Sequence[str]) -> Tuple[str, ...]:
    return tuple(f"{a}⊗{b}" for a in left for b in right)


def _validation_error(side: str, report: AxiomReport) -> ValueError:
    w = report.witness or {}
    return ValueError(
        f"{side} failed the {report.checked} check at {tuple(w.get('inputs', ()))}: "
        f"lhs {w.get('lhs')} != rhs {w.get('rhs')}"
    )


def tensor_lie(g: FiniteAlgebra, B: FiniteAlgebra, validate: bool = True) -> FiniteAlgebra:
    """The bracket above on g (x) B, with basis index (i, p) at i * B.dim + p.

    With validate, the inputs are first checked to be Leibniz and Zinbiel
    respectively; the output is then a Lie algebra. Without it the bracket is
    built regardless, which is how a deliberately broken input gets examined.
    """
    if validate:
        rep = check_axioms(g, "leibniz")
        if not rep.ok:
            raise _validation_error("left factor", rep)
        rep = check_axioms(B, "zinbiel")
        if not rep.ok:
            raise _validation_error("right factor", rep)
    bd = B.dim
    dim = g.dim * bd
    products: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i1 in range(g.dim):
        for p1 in range(bd):
            for i2 in range(g.dim):
                for p2 in range(bd):
                    acc: Vec = {}
                    for ga, ca in g.product(i1, i2).items():
                        for qb, cb in B.product(p1, p2).items():
                            _sadd(acc, ga * bd + qb, ca * cb)
                    for ga, ca in g.product(i2, i1).items():
                        for qb, cb in B.product(p2, p1).items():
                            _sadd(acc, ga * bd + qb, -ca * cb)
                    if acc:
                        products[(i1 * bd + p1, i2 * bd + p2)] = acc
    return FiniteAlgebra(
        kind="lie",
        dim=dim,
        basis_names=_tensor_names(g.basis_names, B.basis_names),
        products=products,
    )


def tensor_module(
    g: FiniteAlgebra,
    B: FiniteAlgebra,
    M: Bimodule,
    lie_alg: Optional[FiniteAlgebra] = None,
) -> Bimodule:
    """g (x) M as a module over tensor_lie(g, B).

    Left action: (a (x) b) * (a' (x) m) = [a, a'] (x) (b m) - [a', a] (x) (m b).
    The right action is stored as its negative, matching the antisymmetry of
    the bracket on the algebra side.
    """
    if M.algebra != B:
        raise ValueError("module must be over the Zinbiel factor")
    if lie_alg is None:
        lie_alg = tensor_lie(g, B, validate=False)
    bd, md = B.dim, M.dim
    left: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    right: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i1 in range(g.dim):
        for p in range(bd):
            for i2 in range(g.dim):
                for k in range(md):
                    acc: Vec = {}
                    for ga, ca in g.product(i1, i2).items():
                        for mk, cm in M.act_left(p, k).items():
                            _sadd(acc, ga * md + mk, ca * cm)
                    for ga, ca in g.product(i2, i1).items():
                        for mk, cm in M.act_right(k, p).items():
                            _sadd(acc, ga * md + mk, -ca * cm)
                    if acc:
                        a_idx = i1 * bd + p
                        m_idx = i2 * md + k
                        left[(a_idx, m_idx)] = acc
                        right[(m_idx, a_idx)] = {j: -c for j, c in acc.items()}
    return Bimodule(
        algebra=lie_alg,
        dim=g.dim * md,
        basis_names=_tensor_names(g.basis_names, M.basis_names),
        left=left,
        right=right,
    )


def _sadd(vec: Vec, key: int, val: Fraction) -> None:
    nv = vec.get(key, 0) + val
    if nv:
        vec[key] = nv
    else:
        vec.pop(key, None)


@lru_cache(maxsize=None)
def _perm_signs(n: int) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    out = []
    for perm in permutations(range(n)):
        out.append((permutation_sign(tuple(p + 1 for p in perm)), perm))
    return tuple(out)


class TensorContext:
    """One tensor construction with its memoized left-normed brackets."""

    def __init__(self, g: FiniteAlgebra, B: FiniteAlgebra, M: Bimodule, validate: bool = False):
        if M.algebra != B:
            raise ValueError("module must be over the Zinbiel factor")
        self.g = g
        self.B = B
        self.M = M
        self.lie = tensor_lie(g, B, validate=validate)
        self.module = tensor_module(g, B, M, self.lie)
        self._ln_cache: Dict[Tuple[int, ...], Vec] = {}
        self.bracket_bound = _bracket_length_bound(g)

    def left_normed(self, seq: Tuple[int, ...]) -> Vec:
        """[[...[x_1, x_2], ...], x_k] for basis indices of g, cached by prefix."""
        if not seq:
            raise ValueError("need at least one factor")
        cached = self._ln_cache.get(seq)
        if cached is not None:
            return cached
        if len(seq) == 1:
            v: Vec = {seq[0]: Fraction(1)}
        else:
            v = {}
            last = seq[-1]
            for i, c in self.left_normed(seq[:-1]).items():
                add_scaled(v, self.g.product(i, last), c)
        self._ln_cache[seq] = v
        return v


def _bracket_length_bound(g: FiniteAlgebra, cap: int = BRACKET_BOUND_CAP) -> int:
    """Length beyond which every left-normed bracket in g is certainly zero.

    Tracks only index support, so it is an upper bound on the true nilpotency
    length, never an undercount; graded truncations make it exact.
    """
    supp = set(range(g.dim))
    k = 1
    while k < cap:
        nxt: set = set()
        for i in supp:
            for j in range(g.dim):
                nxt.update(g.product(i, j).keys())
        if not nxt:
            return k
        supp = nxt
        k += 1
    return cap


def psi_apply(ctx: TensorContext, f: Cochain) -> Cochain:
    """The alternating image of a degree-n cochain on B under the map above."""
    if f.theory != "dl":
        raise ValueError("psi consumes 'dl' cochains")
    if f.algebra_dim != ctx.B.dim or f.module_dim != ctx.M.dim:
        raise ValueError("cochain dimensions do not match the context")
    n = f.degree
    tdim = ctx.lie.dim
    tmd = ctx.module.dim
    if n > ctx.bracket_bound:
        return Cochain("ce", n, tdim, tmd, {})
    bd = ctx.B.dim
    md = ctx.M.dim
    values: Dict[Tuple[int, ...], Vec] = {}
    signs = _perm_signs(n)
    for T in ce_tuples(tdim, n):
        pairs = [divmod(t, bd) for t in T]
        acc: Vec = {}
        for sgn, perm in signs:
            bs = tuple(pairs[p][1] for p in perm)
            fv = f.values.get(bs)
            if not fv:
                continue
            gs = tuple(pairs[p][0] for p in perm)
            lv = ctx.left_normed(gs)
            if not lv:
                continue
            for ga, ca in lv.items():
                base = ga * md
                c2 = ca if sgn == 1 else -ca
                for mk, cv in fv.items():
                    _sadd(acc, base + mk, c2 * cv)
        if acc:
            values[T] = acc
    return Cochain("ce", n, tdim, tmd, values)


def psi_matrix(ctx: TensorContext, degree: int) -> Matrix:
    """Matrix of psi at one degree, in the standard basis orders of both sides."""
    if degree < 1:
        raise ValueError("psi starts at degree 1")
    tdim = ctx.lie.dim
    tmd = ctx.module.dim
    bd = ctx.B.dim
    md = ctx.M.dim
    nrows = ce_space_dim(tdim, tmd, degree)
    ncols = dl_space_dim(bd, md, degree)
    rows: List[Vec] = [dict() for _ in range(nrows)]
    if degree > ctx.bracket_bound:
        return Matrix(nrows, ncols, rows)
    signs = _perm_signs(degree)
    for out_rank, T in enumerate(ce_tuples(tdim, degree)):
        pairs = [divmod(t, bd) for t in T]
        for sgn, perm in signs:
            gs = tuple(pairs[p][0] for p in perm)
            lv = ctx.left_normed(gs)
            if not lv:
                continue
            bs = tuple(pairs[p][1] for p in perm)
            col_base = _dl_rank(bs, bd) * md
            for ga, ca in lv.items():
                row_base = out_rank * tmd + ga * md
                c2 = ca if sgn == 1 else -ca
                for mk in range(md):
                    _madd(rows[row_base + mk], col_base + mk, c2)
    return Matrix(nrows, ncols, rows)


def _madd(row: Vec, col: int, val: Fraction) -> None:
    nv = row.get(col, 0) + val
    if nv:
        row[col] = nv
    else:
        del row[col]


@dataclass
class ChainMapReport:
    """Outcome of the numerical chain-map verification on random cochains."""

    degree: int
    trials: int
    seed: int
    passed: bool
    failed_trials: List[int]
    witness: Optional[dict]
    axioms: Dict[str, AxiomReport]

    @property
    def axioms_ok(self) -> bool:
        return all(r.ok for r in self.axioms.values())

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "trials": self.trials,
            "seed": self.seed,
            "chain_map_holds": self.passed,
            "failed_trials": self.failed_trials,
            "witness": self.witness,
            "axioms": {
                name: {"ok": r.ok, "checked": r.checked, "witness": r.witness}
                for name, r in self.axioms.items()
            },
        }


def _first_difference(ctx: TensorContext, lhs: Cochain, rhs: Cochain, trial: int) -> Optional[dict]:
    names = ctx.lie.basis_names
    mnames = ctx.module.basis_names
    zero = Fraction(0)
    for key in sorted(set(lhs.values) | set(rhs.values)):
        va = lhs.values.get(key, {})
        vb = rhs.values.get(key, {})
        if va == vb:
            continue
        for k in sorted(set(va) | set(vb)):
            a = va.get(k, zero)
            b = vb.get(k, zero)
            if a != b:
                return {
                    "trial": trial,
                    "arguments": [names[i] for i in key],
                    "component": mnames[k],
                    "lhs": format_scalar(a),
                    "rhs": format_scalar(b),
                }
    return None


def verify_chain_map(
    g: FiniteAlgebra,
    B: FiniteAlgebra,
    M: Bimodule,
    degree: int,
    trials: int = 10,
    seed: int = 0,
    with_axioms: bool = True,
) -> ChainMapReport:
    """Check delta(psi f) == psi(delta f) exactly on seeded random cochains.

    Trial t draws its cochain from Random(seed + t). The report separates the
    equality outcome from the axiom checks on the inputs and on the built
    tensor algebra, because the equality is insensitive to some broken inputs
    while the axioms are not.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    ctx = TensorContext(g, B, M)
    failed: List[int] = []
    witness = None
    for t in range(trials):
        rng = Random(seed + t)
        f = random_dl_cochain(B.dim, M.dim, degree, rng)
        lhs = ce_delta(psi_apply(ctx, f), ctx.module)
        rhs = psi_apply(ctx, dl_delta(f, M))
        if lhs != rhs:
            failed.append(t)
            if witness is None:
                witness = _first_difference(ctx, lhs, rhs, t)
    axioms: Dict[str, AxiomReport] = {}
    if with_axioms:
        axioms["g_leibniz"] = check_axioms(g, "leibniz")
        axioms["b_zinbiel"] = check_axioms(B, "zinbiel")
        axioms["tensor_lie"] = check_axioms(ctx.lie, "lie")
        axioms["tensor_lie_module"] = check_axioms(ctx.lie, "lie-module", ctx.module)
    return ChainMapReport(
        degree=degree,
        trials=trials,
        seed=seed,
        passed=not failed,
        failed_trials=failed,
        witness=witness,
        axioms=axioms,
    )


class PsiNotInjectiveError(ValueError):
    """psi dropped rank at some degree, so the quotient comparison is off."""

    def __init__(self, failures: List[dict]):
        self.failures = failures
        first = min(f["degree"] for f in failures)
        super().__init__(
            f"embedding not injective at degree {first}; LES hypothesis not met"
        )


def les_report(g: FiniteAlgebra, B: FiniteAlgebra, M: Bimodule, max_degree: int) -> dict:
    """Rank bookkeeping comparing the two cohomologies through the quotient.

    For each degree n up to max_degree the report gives the cohomology of the
    non-symmetric complex of B, of the tensor Lie algebra, and of the quotient
    of the latter by the image of psi, together with the ranks of the induced
    maps, and checks the exactness identity

        dim H^n(Q) = (dim H^n_lie - r_n) + (dim H^{n+1} - r_{n+1}),

    where r_k is the rank of the induced map in degree k. The comparison only
    makes sense when psi is injective in every involved degree (1 through
    max_degree + 1); if not, a PsiNotInjectiveError is raised.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    if max_degree + 1 > DL_MAX_DEGREE:
        raise ValueError(f"max_degree can be at most {DL_MAX_DEGREE - 1}")
    if max_degree > CE_MAX_DEGREE:
        raise ValueError(f"max_degree can be at most {CE_MAX_DEGREE}")
    ctx = TensorContext(g, B, M)
    tdim, tmd = ctx.lie.dim, ctx.module.dim
    bd, md = B.dim, M.dim

    psi_mats = {k: psi_matrix(ctx, k) for k in range(1, max_degree + 2)}
    psi_rank = {0: 0, **{k: m.rank() for k, m in psi_mats.items()}}
    expected = {k: dl_space_dim(bd, md, k) for k in psi_mats}
    failures = [
        {"degree": k, "rank": psi_rank[k], "expected": expected[k]}
        for k in sorted(psi_mats)
        if psi_rank[k] != expected[k]
    ]
    precheck = {
        "degrees": sorted(psi_mats),
        "psi_ranks": {k: psi_rank[k] for k in sorted(psi_mats)},
        "expected_ranks": expected,
        "injective": not failures,
    }
    if failures:
        raise PsiNotInjectiveError(failures)

    dl_mats = {n: dl_delta_matrix(M, n) for n in range(1, max_degree + 2)}
    dl_rank = {0: 0, **{n: m.rank() for n, m in dl_mats.items()}}
    ce_mats = {n: ce_delta_matrix(ctx.module, n) for n in range(0, max_degree + 1)}
    ce_rank = {-1: 0, **{n: m.rank() for n, m in ce_mats.items()}}

    def h_dl(n: int) -> int:
        return dl_space_dim(bd, md, n) - dl_rank[n] - dl_rank[n - 1]

    def h_lie(n: int) -> int:
        return ce_space_dim(tdim, tmd, n) - ce_rank[n] - ce_rank[n - 1]

    @lru_cache(maxsize=None)
    def rank_q(n: int) -> int:
        return ce_mats[n].hstack(psi_mats[n + 1]).rank() - psi_rank[n + 1]

    def dim_q(n: int) -> int:
        return ce_space_dim(tdim, tmd, n) - psi_rank[n]

    @lru_cache(maxsize=None)
    def induced_rank(n: int) -> int:
        kernel = dl_mats[n].nullspace()
        if not kernel:
            return 0
        pz = psi_mats[n].mul(Matrix.from_cols(kernel, dl_space_dim(bd, md, n)))
        return pz.hstack(ce_mats[n - 1]).rank() - ce_rank[n - 1]

    rows = []
    for n in range(1, max_degree + 1):
        hq = dim_q(n) - rank_q(n) - rank_q(n - 1)
        r_n = induced_rank(n)
        r_next = induced_rank(n + 1)
        rhs = (h_lie(n) - r_n) + (h_dl(n + 1) - r_next)
        rows.append({
            "degree": n,
            "h_dl": h_dl(n),
            "h_dl_next": h_dl(n + 1),
            "h_lie": h_lie(n),
            "dim_quotient": dim_q(n),
            "h_quotient": hq,
            "induced_rank": r_n,
            "induced_rank_next": r_next,
            "identity_lhs": hq,
            "identity_rhs": rhs,
            "identity_holds": hq == rhs,
        })
    return {
        "tensor_dim": tdim,
        "tensor_module_dim": tmd,
        "max_degree": max_degree,
        "precheck": precheck,
        "rows": rows,
    }
