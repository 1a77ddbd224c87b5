"""Finite-dimensional algebras, bimodules, and axiom checking.

An algebra is a structure-constant table over the rationals: products maps a
basis pair (i, j) to the sparse expansion of e_i * e_j. A bimodule carries two
tables, left for a(m) and right for (m)a. Nothing here assumes which identities
hold; check_axioms tests a named identity family and reports the first failing
basis tuple, scanning tuples in lexicographic order so witnesses are stable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .linalg import Scalar, format_scalar, parse_scalar
from .sparsevec import Vec, add_scaled

Table = Dict[Tuple[int, int], Dict[int, Fraction]]


def _clean_table(table: Table, left_dim: int, right_dim: int, out_dim: int, label: str) -> Table:
    clean: Table = {}
    for (i, j), tbl in table.items():
        if not (0 <= i < left_dim and 0 <= j < right_dim):
            raise ValueError(f"{label} key ({i}, {j}) out of range")
        entry: Dict[int, Fraction] = {}
        for k, c in tbl.items():
            if not (0 <= k < out_dim):
                raise ValueError(f"{label} result index {k} out of range")
            f = parse_scalar(c)
            if f:
                entry[k] = f
        if entry:
            clean[(i, j)] = entry
    return clean


def _parse_dense(vec: Sequence[Scalar], dim: int, label: str) -> Vec:
    if len(vec) != dim:
        raise ValueError(f"{label} must have length {dim}, got {len(vec)}")
    return {i: f for i, x in enumerate(vec) if (f := parse_scalar(x))}


def _to_dense(vec: Vec, dim: int) -> List[Fraction]:
    out = [Fraction(0)] * dim
    for k, v in vec.items():
        out[k] = v
    return out


@dataclass(frozen=True)
class FiniteAlgebra:
    """Structure constants for one bilinear product on a finite basis."""

    kind: str
    dim: int
    basis_names: Tuple[str, ...]
    products: Table

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("algebra dimension must be at least 1")
        if len(self.basis_names) != self.dim:
            raise ValueError("basis name count must equal dim")
        if len(set(self.basis_names)) != self.dim:
            raise ValueError("basis names must be distinct")
        object.__setattr__(
            self, "products", _clean_table(self.products, self.dim, self.dim, self.dim, "product")
        )

    def index_of(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError(f"no basis element named {name!r}") from None

    def product(self, i: int, j: int) -> Vec:
        """Sparse expansion of e_i * e_j."""
        return self.products.get((i, j), {})

    def mul_sparse(self, xv: Vec, yv: Vec) -> Vec:
        out: Vec = {}
        for i, a in xv.items():
            for j, b in yv.items():
                tbl = self.products.get((i, j))
                if tbl:
                    add_scaled(out, tbl, a * b)
        return out

    def multiply(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> List[Fraction]:
        """Product of two coefficient vectors, densely."""
        xv = _parse_dense(x, self.dim, "left factor")
        yv = _parse_dense(y, self.dim, "right factor")
        return _to_dense(self.mul_sparse(xv, yv), self.dim)


@dataclass(frozen=True)
class Bimodule:
    """Left and right actions of an algebra on a finite module."""

    algebra: FiniteAlgebra
    dim: int
    basis_names: Tuple[str, ...]
    left: Table = field(default_factory=dict)
    right: Table = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("module dimension must be at least 1")
        if len(self.basis_names) != self.dim:
            raise ValueError("module basis name count must equal dim")
        if len(set(self.basis_names)) != self.dim:
            raise ValueError("module basis names must be distinct")
        adim = self.algebra.dim
        object.__setattr__(
            self, "left", _clean_table(self.left, adim, self.dim, self.dim, "left action")
        )
        object.__setattr__(
            self, "right", _clean_table(self.right, self.dim, adim, self.dim, "right action")
        )

    def act_left(self, i: int, k: int) -> Vec:
        """Sparse expansion of e_i acting on module element m_k from the left."""
        return self.left.get((i, k), {})

    def act_right(self, k: int, i: int) -> Vec:
        return self.right.get((k, i), {})

    def left_sparse(self, xv: Vec, mv: Vec) -> Vec:
        out: Vec = {}
        for i, a in xv.items():
            for k, b in mv.items():
                tbl = self.left.get((i, k))
                if tbl:
                    add_scaled(out, tbl, a * b)
        return out

    def right_sparse(self, mv: Vec, xv: Vec) -> Vec:
        out: Vec = {}
        for k, a in mv.items():
            for i, b in xv.items():
                tbl = self.right.get((k, i))
                if tbl:
                    add_scaled(out, tbl, a * b)
        return out


def regular(alg: FiniteAlgebra) -> Bimodule:
    """The algebra acting on itself by its own product on both sides."""
    tables = {k: dict(v) for k, v in alg.products.items()}
    return Bimodule(
        algebra=alg,
        dim=alg.dim,
        basis_names=alg.basis_names,
        left=tables,
        right={k: dict(v) for k, v in tables.items()},
    )


@dataclass
class AxiomReport:
    ok: bool
    checked: str
    witness: Optional[dict] = None


def _vec_display(vec: Vec, names: Tuple[str, ...]) -> Dict[str, str]:
    return {names[k]: format_scalar(v) for k, v in sorted(vec.items())}


Case = Tuple[str, Tuple[str, ...], Vec, Vec]


def _leibniz_cases(alg: FiniteAlgebra) -> Iterator[Case]:
    identity = "[x, [y, z]] = [[x, y], z] - [[x, z], y]"
    e = lambda i: {i: Fraction(1)}
    m = alg.mul_sparse
    for i, j, k in iproduct(range(alg.dim), repeat=3):
        lhs = m(e(i), m(e(j), e(k)))
        rhs = dict(m(m(e(i), e(j)), e(k)))
        add_scaled(rhs, m(m(e(i), e(k)), e(j)), Fraction(-1))
        names = (alg.basis_names[i], alg.basis_names[j], alg.basis_names[k])
        yield identity, names, lhs, rhs


def _zinbiel_cases(alg: FiniteAlgebra) -> Iterator[Case]:
    identity = "(x . y) . z = x . (y . z) + x . (z . y)"
    e = lambda i: {i: Fraction(1)}
    m = alg.mul_sparse
    for i, j, k in iproduct(range(alg.dim), repeat=3):
        lhs = m(m(e(i), e(j)), e(k))
        inner = dict(m(e(j), e(k)))
        add_scaled(inner, m(e(k), e(j)))
        rhs = m(e(i), inner)
        names = (alg.basis_names[i], alg.basis_names[j], alg.basis_names[k])
        yield identity, names, lhs, rhs


def _lie_cases(alg: FiniteAlgebra) -> Iterator[Case]:
    e = lambda i: {i: Fraction(1)}
    m = alg.mul_sparse
    nm = alg.basis_names
    for i in range(alg.dim):
        yield "[x, x] = 0", (nm[i],), m(e(i), e(i)), {}
    for i, j in iproduct(range(alg.dim), repeat=2):
        if i < j:
            lhs = dict(m(e(i), e(j)))
            add_scaled(lhs, m(e(j), e(i)))
            yield "[x, y] + [y, x] = 0", (nm[i], nm[j]), lhs, {}
    identity = "[[x, y], z] + [[y, z], x] + [[z, x], y] = 0"
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            for k in range(j + 1, alg.dim):
                lhs = dict(m(m(e(i), e(j)), e(k)))
                add_scaled(lhs, m(m(e(j), e(k)), e(i)))
                add_scaled(lhs, m(m(e(k), e(i)), e(j)))
                yield identity, (nm[i], nm[j], nm[k]), lhs, {}


def _zinbiel_bimodule_cases(alg: FiniteAlgebra, mod: Bimodule) -> Iterator[Case]:
    e = lambda i: {i: Fraction(1)}
    an, mn = alg.basis_names, mod.basis_names
    l, r = mod.left_sparse, mod.right_sparse
    for k, i, j in iproduct(range(mod.dim), range(alg.dim), range(alg.dim)):
        lhs = r(r(e(k), e(i)), e(j))
        inner = dict(alg.product(i, j))
        add_scaled(inner, alg.product(j, i))
        rhs = r(e(k), inner)
        yield "(m . y) . z = m . (y . z + z . y)", (mn[k], an[i], an[j]), lhs, rhs
    for i, k, j in iproduct(range(alg.dim), range(mod.dim), range(alg.dim)):
        lhs = r(l(e(i), e(k)), e(j))
        rhs = dict(l(e(i), r(e(k), e(j))))
        add_scaled(rhs, l(e(i), l(e(j), e(k))))
        yield "(x . m) . z = x . (m . z + z . m)", (an[i], mn[k], an[j]), lhs, rhs
    for i, j, k in iproduct(range(alg.dim), range(alg.dim), range(mod.dim)):
        lhs = l(alg.product(i, j), e(k))
        rhs = dict(l(e(i), l(e(j), e(k))))
        add_scaled(rhs, l(e(i), r(e(k), e(j))))
        yield "(x . y) . m = x . (y . m + m . y)", (an[i], an[j], mn[k]), lhs, rhs


def _leibniz_representation_cases(alg: FiniteAlgebra, mod: Bimodule) -> Iterator[Case]:
    e = lambda i: {i: Fraction(1)}
    an, mn = alg.basis_names, mod.basis_names
    l, r = mod.left_sparse, mod.right_sparse
    for i, j, k in iproduct(range(alg.dim), range(alg.dim), range(mod.dim)):
        lhs = l(e(i), l(e(j), e(k)))
        rhs = dict(l(alg.product(i, j), e(k)))
        add_scaled(rhs, r(l(e(i), e(k)), e(j)), Fraction(-1))
        yield "x(ym) = [x,y]m - (xm)y", (an[i], an[j], mn[k]), lhs, rhs
    for i, k, j in iproduct(range(alg.dim), range(mod.dim), range(alg.dim)):
        lhs = l(e(i), r(e(k), e(j)))
        rhs = dict(r(l(e(i), e(k)), e(j)))
        add_scaled(rhs, l(alg.product(i, j), e(k)), Fraction(-1))
        yield "x(my) = (xm)y - [x,y]m", (an[i], mn[k], an[j]), lhs, rhs
    for k, i, j in iproduct(range(mod.dim), range(alg.dim), range(alg.dim)):
        lhs = r(e(k), alg.product(i, j))
        rhs = dict(r(r(e(k), e(i)), e(j)))
        add_scaled(rhs, r(r(e(k), e(j)), e(i)), Fraction(-1))
        yield "m[y,z] = (my)z - (mz)y", (mn[k], an[i], an[j]), lhs, rhs


def _lie_module_cases(alg: FiniteAlgebra, mod: Bimodule) -> Iterator[Case]:
    identity = "[x, y]v = x(yv) - y(xv)"
    e = lambda i: {i: Fraction(1)}
    an, mn = alg.basis_names, mod.basis_names
    l = mod.left_sparse
    for i, j, k in iproduct(range(alg.dim), range(alg.dim), range(mod.dim)):
        lhs = l(alg.product(i, j), e(k))
        rhs = dict(l(e(i), l(e(j), e(k))))
        add_scaled(rhs, l(e(j), l(e(i), e(k))), Fraction(-1))
        yield identity, (an[i], an[j], mn[k]), lhs, rhs


_ALGEBRA_CHECKS = {
    "leibniz": _leibniz_cases,
    "zinbiel": _zinbiel_cases,
    "lie": _lie_cases,
}

_MODULE_CHECKS = {
    "zinbiel-bimodule": _zinbiel_bimodule_cases,
    "leibniz-representation": _leibniz_representation_cases,
    "lie-module": _lie_module_cases,
}

AXIOM_KINDS = tuple(_ALGEBRA_CHECKS) + tuple(_MODULE_CHECKS)


def check_axioms(
    alg: FiniteAlgebra, which: str, module: Optional[Bimodule] = None
) -> AxiomReport:
    """Test the named identity family on every basis tuple.

    Returns the first failing tuple as a witness, with both sides expanded in
    the relevant basis. Module families require the module argument, and the
    witness names mix algebra and module basis elements in identity order.
    """
    if which in _ALGEBRA_CHECKS:
        cases = _ALGEBRA_CHECKS[which](alg)
        value_names: Tuple[str, ...] = alg.basis_names
    elif which in _MODULE_CHECKS:
        if module is None:
            raise ValueError(f"axiom family {which!r} needs a module")
        if module.algebra is not alg and module.algebra != alg:
            raise ValueError("module was built over a different algebra")
        cases = _MODULE_CHECKS[which](alg, module)
        value_names = module.basis_names
    else:
        raise ValueError(f"unknown axiom family {which!r}; known: {', '.join(AXIOM_KINDS)}")
    for identity, inputs, lhs, rhs in cases:
        if lhs != rhs:
            return AxiomReport(
                ok=False,
                checked=which,
                witness={
                    "identity": identity,
                    "inputs": list(inputs),
                    "lhs": _vec_display(lhs, value_names),
                    "rhs": _vec_display(rhs, value_names),
                },
            )
    return AxiomReport(ok=True, checked=which)
