"""Positive roots of type A_{n-1} and the case analysis for the generators.

A positive root ``alpha_i + ... + alpha_{j-1}`` is the pair ``(i, j)`` with
``1 <= i < j <= n``; its support is the node interval ``[i, j-1]``.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple


class InvalidN(ValueError):
    pass


class PosRoot(NamedTuple):
    i: int
    j: int

    @property
    def height(self) -> int:
        return self.j - self.i

    @property
    def support(self) -> range:
        return range(self.i, self.j)

    def is_simple(self) -> bool:
        return self.j == self.i + 1

    def label(self) -> str:
        return f"w_{{{self.i},{self.j}}}"

    @classmethod
    def parse(cls, text: str) -> "PosRoot":
        body = text.strip()
        if not (body.startswith("w_{") and body.endswith("}")):
            raise ValueError(f"not a root label: {text!r}")
        i, j = (int(x) for x in body[3:-1].split(","))
        if not 1 <= i < j:
            raise ValueError(f"not a positive root: {text!r}")
        return cls(i, j)


class CaseTag(Enum):
    A_zero = "a"
    B_simple = "b"
    C_c = "c"
    C_cprime = "c'"
    D_d = "d"
    D_dprime = "d'"


@lru_cache(maxsize=None)
def enumerate_roots(n: int) -> tuple[PosRoot, ...]:
    """The n(n-1)/2 positive roots in basis order.

    Order: ``j`` increasing, then ``i`` decreasing, i.e. alpha_1, alpha_2,
    alpha_2+alpha_1, alpha_3, alpha_3+alpha_2, ...  This matches the order
    e_1, e_2e_1, g_2e_1, e_3e_2e_1, ... of the module's spanning set.
    """
    if n < 2:
        raise InvalidN(f"n must be at least 2, got {n}")
    return tuple(PosRoot(i, j) for j in range(2, n + 1) for i in range(j - 1, 0, -1))


@lru_cache(maxsize=None)
def root_index(n: int) -> dict[PosRoot, int]:
    return {b: k for k, b in enumerate(enumerate_roots(n))}


def height(beta: PosRoot) -> int:
    return beta.j - beta.i


def inner(beta: PosRoot, k: int) -> Fraction:
    """``(beta | alpha_k)`` for the form with ``(a_i|a_i) = 1`` and ``(a_i|a_{i+-1}) = -1/2``."""
    total = Fraction(0)
    for s in beta.support:
        if s == k:
            total += 1
        elif abs(s - k) == 1:
            total -= Fraction(1, 2)
    return total


def classify(beta: PosRoot, k: int) -> CaseTag:
    """Which formula of the generator action applies to ``x_beta`` under ``nu_k``."""
    i, j = beta
    if i == k and j == k + 1:
        return CaseTag.B_simple
    if j == k:
        return CaseTag.C_c
    if i == k + 1:
        return CaseTag.C_cprime
    if j - 1 == k:
        return CaseTag.D_d
    if i == k:
        return CaseTag.D_dprime
    return CaseTag.A_zero


def plus_simple(beta: PosRoot, k: int) -> PosRoot:
    """``beta + alpha_k`` for the (c) and (c') cases."""
    if beta.j == k:
        return PosRoot(beta.i, k + 1)
    if beta.i == k + 1:
        return PosRoot(k, beta.j)
    raise ValueError(f"{beta} + alpha_{k} is not a root")


def minus_simple(beta: PosRoot, k: int) -> PosRoot:
    """``beta - alpha_k`` for the (d) and (d') cases."""
    if beta.j - 1 == k and beta.i < k:
        return PosRoot(beta.i, k)
    if beta.i == k and beta.j - 1 > k:
        return PosRoot(k + 1, beta.j)
    raise ValueError(f"{beta} - alpha_{k} is not a root")
