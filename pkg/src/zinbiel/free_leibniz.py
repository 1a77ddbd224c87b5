"""Truncated free Leibniz algebras on m letters.

Basis elements are the left-normed words of length 1..N over the letters,
a word (i_1, ..., i_k) standing for [[...[x_{i_1}, x_{i_2}], ...], x_{i_k}].
Brackets of words expand by repeatedly folding the right argument into the
left one; any term longer than N is truncated to zero, which keeps the
quotient a Leibniz algebra because the word length is a grading.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Dict, Iterator, List, Tuple

from .algebras import FiniteAlgebra
from .shuffles import leibniz_expansion

Word = Tuple[int, ...]

DEFAULT_DIM_CAP = 512

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def words(num_letters: int, max_length: int) -> Iterator[Word]:
    """All words, shortest first, lexicographic within a length."""
    if num_letters < 1:
        raise ValueError("need at least one letter")
    if max_length < 1:
        raise ValueError("maximum word length must be at least 1")
    for length in range(1, max_length + 1):
        yield from iproduct(range(num_letters), repeat=length)


def word_count(num_letters: int, max_length: int) -> int:
    return sum(num_letters ** k for k in range(1, max_length + 1))


def word_name(word: Word, num_letters: int) -> str:
    if num_letters <= len(_LETTERS):
        return "".join(_LETTERS[i] for i in word)
    return ".".join(f"x{i + 1}" for i in word)


def word_bracket(u: Word, v: Word, max_length: int) -> Dict[Word, Fraction]:
    """[u, v] expanded over basis words, dropping anything longer than max_length.

    The right argument v, itself a left-normed word, unfolds into 2^(len(v)-1)
    signed concatenations of u with a permuted copy of v's letters; repeated
    letters can make terms collide, so coefficients are merged.
    """
    if not u or not v:
        raise ValueError("words must be nonempty")
    out: Dict[Word, Fraction] = {}
    if len(u) + len(v) > max_length:
        return out
    for sign, w in leibniz_expansion(len(v)):
        term = u + tuple(v[p - 1] for p in w)
        c = out.get(term, 0) + sign
        if c:
            out[term] = Fraction(c)
        else:
            del out[term]
    return out


def build_truncated(
    num_letters: int, max_length: int, dim_cap: int = DEFAULT_DIM_CAP
) -> FiniteAlgebra:
    """The free Leibniz algebra on num_letters letters, cut at word length max_length."""
    count = word_count(num_letters, max_length)
    if count > dim_cap:
        raise ValueError(
            f"truncated free algebra needs dimension {count}, over the cap {dim_cap}"
        )
    basis: List[Word] = list(words(num_letters, max_length))
    index = {w: i for i, w in enumerate(basis)}
    products: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if len(u) + len(v) > max_length:
                continue
            expansion = word_bracket(u, v, max_length)
            if expansion:
                products[(i, j)] = {index[w]: c for w, c in expansion.items()}
    return FiniteAlgebra(
        kind="leibniz",
        dim=count,
        basis_names=tuple(word_name(w, num_letters) for w in basis),
        products=products,
    )
