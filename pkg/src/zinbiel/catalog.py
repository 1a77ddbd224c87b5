"""Named example algebras, available programmatically and as "builtin:" CLI refs.

Available names:

* B2            two-dimensional Zinbiel algebra, e1.e1 = e2
* B3            three-dimensional Zinbiel algebra, e1.e2 = e3
* polyzinbiel(d)  truncated polynomial model of dimension d+1:
                  p_a . p_b = p_{a+b+1} / (b+1) while a+b+1 <= d
* leibniz2      two-dimensional Leibniz algebra, [a, a] = b
* lie2          the nonabelian two-dimensional Lie algebra, [e1, e2] = e1
* freeleibniz(m, N)  free Leibniz algebra on m letters, words cut at length N
* regular(NAME)  the named algebra acting on itself, as a bimodule

perturbed_b2() is B2 with the extra product e2.e2 = e1 spliced in; it breaks
the Zinbiel identity on purpose and serves as a negative control in tests.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .algebras import Bimodule, FiniteAlgebra, regular
from .free_leibniz import DEFAULT_DIM_CAP, build_truncated

BUILTIN_NAMES = (
    "B2",
    "B3",
    "polyzinbiel(d)",
    "leibniz2",
    "lie2",
    "freeleibniz(m,N)",
    "regular(NAME)",
)

_ONE = Fraction(1)


def _b2() -> FiniteAlgebra:
    return FiniteAlgebra(
        kind="zinbiel",
        dim=2,
        basis_names=("e1", "e2"),
        products={(0, 0): {1: _ONE}},
    )


def _b3() -> FiniteAlgebra:
    return FiniteAlgebra(
        kind="zinbiel",
        dim=3,
        basis_names=("e1", "e2", "e3"),
        products={(0, 1): {2: _ONE}},
    )


def _polyzinbiel(d: int) -> FiniteAlgebra:
    if d < 0:
        raise ValueError("polyzinbiel needs d >= 0")
    products = {}
    for a in range(d + 1):
        for b in range(d + 1):
            if a + b + 1 <= d:
                products[(a, b)] = {a + b + 1: Fraction(1, b + 1)}
    return FiniteAlgebra(
        kind="zinbiel",
        dim=d + 1,
        basis_names=tuple(f"p{a}" for a in range(d + 1)),
        products=products,
    )


def _leibniz2() -> FiniteAlgebra:
    return FiniteAlgebra(
        kind="leibniz",
        dim=2,
        basis_names=("a", "b"),
        products={(0, 0): {1: _ONE}},
    )


def _lie2() -> FiniteAlgebra:
    return FiniteAlgebra(
        kind="lie",
        dim=2,
        basis_names=("e1", "e2"),
        products={(0, 1): {0: _ONE}, (1, 0): {0: -_ONE}},
    )


def perturbed_b2() -> FiniteAlgebra:
    """B2 plus e2.e2 = e1: claims to be Zinbiel but is not."""
    return FiniteAlgebra(
        kind="zinbiel",
        dim=2,
        basis_names=("e1", "e2"),
        products={(0, 0): {1: _ONE}, (1, 1): {0: _ONE}},
    )


def _int_args(arg: str, count: int, name: str) -> list:
    parts = [p.strip() for p in arg.split(",")]
    if len(parts) != count or not all(re.fullmatch(r"-?\d+", p) for p in parts):
        raise ValueError(f"{name} takes {count} integer argument(s), got {arg!r}")
    return [int(p) for p in parts]


def builtin(name: str, dim_cap: int = DEFAULT_DIM_CAP) -> Union[FiniteAlgebra, Bimodule]:
    """Resolve a builtin name, e.g. "B3", "freeleibniz(2,3)", "regular(B2)"."""
    name = name.strip()
    m = re.fullmatch(r"([A-Za-z0-9]+)\((.*)\)", name)
    base, arg = (m.group(1), m.group(2)) if m else (name, None)
    if arg is None:
        simple = {"B2": _b2, "B3": _b3, "leibniz2": _leibniz2, "lie2": _lie2}
        if base in simple:
            return simple[base]()
    elif base == "polyzinbiel":
        (d,) = _int_args(arg, 1, "polyzinbiel")
        alg = _polyzinbiel(d)
        if alg.dim > dim_cap:
            raise ValueError(f"polyzinbiel({d}) has dimension {alg.dim}, over the cap {dim_cap}")
        return alg
    elif base == "freeleibniz":
        letters, length = _int_args(arg, 2, "freeleibniz")
        return build_truncated(letters, length, dim_cap=dim_cap)
    elif base == "regular":
        inner = builtin(arg, dim_cap=dim_cap)
        if not isinstance(inner, FiniteAlgebra):
            raise ValueError("regular(...) needs an algebra, not a module")
        return regular(inner)
    raise ValueError(
        f"unknown builtin {name!r}; available: {', '.join(BUILTIN_NAMES)}"
    )
