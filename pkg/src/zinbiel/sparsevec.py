"""Sparse vectors over the rationals, stored as {index: Fraction} with no zero values.

Every mutating helper keeps the no-zeros invariant, so two vectors are equal
as maps iff their dicts are equal.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict

Vec = Dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def add_scaled(acc: Vec, src: Vec, scale: Fraction = ONE) -> Vec:
    """acc += scale * src, in place. Returns acc."""
    if not scale:
        return acc
    for k, v in src.items():
        nv = acc.get(k, ZERO) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def scaled(src: Vec, scale: Fraction) -> Vec:
    if not scale:
        return {}
    return {k: scale * v for k, v in src.items()}


def from_dense(coeffs) -> Vec:
    return {i: Fraction(c) for i, c in enumerate(coeffs) if c}


def to_dense(vec: Vec, length: int) -> list:
    out = [ZERO] * length
    for k, v in vec.items():
        out[k] = v
    return out
