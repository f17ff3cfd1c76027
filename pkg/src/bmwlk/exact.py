"""Exact arithmetic in the field Q(l, r).

Elements of the field are :class:`RatFunc` objects: a reduced ratio of two
integer polynomials in ``l`` and ``r``.  The user-facing view of a
:class:`RatFunc` is a pair of :class:`LaurentPoly` (numerator, denominator)
normalised so that the lexicographically least monomial of the denominator
is ``+1 * l^0 r^0``.  With that normalisation equality and hashing are
structural.

The polynomial gcd and exact division are delegated to FLINT
(``python-flint``); everything else is done here.

Canonical polynomial strings
----------------------------
Monomials are written in decreasing lexicographic order of the exponent
pair ``(a, b)`` of ``l^a r^b``.  Grammar::

    poly    := "0" | ["-"] term ((" + " | " - ") term)*
    term    := int | [int "*"] mono
    mono    := factor ["*" factor]
    factor  := ("l" | "r") ["^{" int "}"]

A unit coefficient is omitted in front of a non-constant monomial, the
exponent is omitted when it equals 1 and a factor is omitted when its
exponent is 0.  Examples: ``"r^{-1} - r"`` (the parameter m),
``"l^{-1}"``, ``"-3*l^{2}*r^{-1} + 1"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Union

import flint

__all__ = [
    "DivisionByZero",
    "PoleAtSpecialization",
    "LaurentPoly",
    "RatFunc",
    "ParamSpec",
    "laurent_normalize",
    "specialize",
    "conjugate",
    "guard_check",
    "L",
    "R",
    "M",
    "ONE",
    "ZERO",
]

_CTX = flint.fmpz_mpoly_ctx.get(("l", "r"), "lex")
_P0 = _CTX.from_dict({})
_P1 = _CTX.constant(1)

Monomial = tuple[int, int]


class DivisionByZero(ZeroDivisionError):
    """Division by the zero rational function."""


class PoleAtSpecialization(ArithmeticError):
    """A denominator vanishes under the requested specialization."""


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Integer Laurent polynomial in ``l`` and ``r``.

    Stored as a mapping ``{(a, b): c}`` for the terms ``c * l^a * r^b``; no
    stored coefficient is zero, so the zero polynomial is the empty map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for (a, b), c in items:
            key = (int(a), int(b))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Monomial, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> "LaurentPoly":
        return cls({(a, b): coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (decreasing exponent pair) order."""
        return sorted(self._terms.items(), reverse=True)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._trusted({k: -v for k, v in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._trusted(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("negative powers only exist for unit monomials")
            ((a, b), c), = self._terms.items()
            return LaurentPoly.monomial(a * e, b * e, c ** abs(e))
        out = LaurentPoly.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def min_exponents(self) -> Monomial:
        if not self._terms:
            return (0, 0)
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def shift(self, da: int, db: int) -> "LaurentPoly":
        return LaurentPoly._trusted({(a + da, b + db): c for (a, b), c in self._terms.items()})

    def map_monomials(self, f: Callable[[int, int], tuple[int, int, int]]) -> "LaurentPoly":
        """Apply a monomial substitution ``l^a r^b -> s * l^a' r^b'``.

        ``f(a, b)`` returns ``(s, a', b')``.
        """
        return LaurentPoly(
            ((a2, b2), c * s) for (a, b), c in self._terms.items() for s, a2, b2 in [f(a, b)]
        )

    def evaluate(self, l, r) -> Fraction:
        """Value at nonzero rationals ``l`` and ``r``."""
        l = Fraction(l)
        r = Fraction(r)
        return sum((c * l ** a * r ** b for (a, b), c in self._terms.items()), Fraction(0))

    def to_mpoly(self):
        """Return ``(p, (a0, b0))`` with ``self == l^a0 r^b0 * p`` and ``p`` a polynomial."""
        a0, b0 = self.min_exponents()
        p = _CTX.from_dict({(a - a0, b - b0): c for (a, b), c in self._terms.items()})
        return p, (a0, b0)

    @classmethod
    def from_mpoly(cls, p, shift: Monomial = (0, 0)) -> "LaurentPoly":
        da, db = shift
        return cls._trusted({(int(a) + da, int(b) + db): int(c) for (a, b), c in p.terms()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, ((a, b), c) in enumerate(self.items()):
            mono = "*".join(
                f for f in (_factor("l", a), _factor("r", b)) if f
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str`` for the canonical grammar (see module docstring)."""
        text = text.strip()
        if text == "0":
            return cls()
        tokens = text.split(" ")
        if len(tokens) % 2 == 0:
            raise ValueError(f"malformed polynomial string {text!r}")
        terms: dict[Monomial, int] = {}
        sign = 1
        for idx, tok in enumerate(tokens):
            if idx % 2 == 1:
                if tok not in "+-" or len(tok) != 1:
                    raise ValueError(f"expected + or -, got {tok!r}")
                sign = 1 if tok == "+" else -1
                continue
            if idx == 0 and tok.startswith("-"):
                sign, tok = -1, tok[1:]
            (a, b), c = _parse_term(tok)
            if (a, b) in terms:
                raise ValueError(f"repeated monomial in {text!r}")
            terms[(a, b)] = sign * c
        return cls(terms)


def _factor(name: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{{{e}}}"


_FACTOR_RE = re.compile(r"([lr])(?:\^\{(-?\d+)\})?$")


def _parse_term(tok: str) -> tuple[Monomial, int]:
    if tok.isdigit():
        return (0, 0), int(tok)
    pieces = tok.split("*")
    coeff = 1
    if pieces[0].isdigit():
        coeff = int(pieces.pop(0))
    exps = {"l": 0, "r": 0}
    for piece in pieces:
        m = _FACTOR_RE.match(piece)
        if not m or exps[m.group(1)]:
            raise ValueError(f"malformed term {tok!r}")
        exps[m.group(1)] = int(m.group(2) or 1)
    return (exps["l"], exps["r"]), coeff


def laurent_normalize(raw: Iterable[tuple[Monomial, int]]) -> LaurentPoly:
    """Canonical form of a raw term list: like monomials merged, zeros dropped."""
    return LaurentPoly(raw)


# ---------------------------------------------------------------------------
# Rational functions


def _reduce(p, q):
    if q.is_zero():
        raise DivisionByZero("division by the zero rational function")
    if p.is_zero():
        return _P0, _P1
    if not q.is_one():
        g = p.gcd(q)
        if not g.is_one():
            p = p / g
            q = q / g
        if q.coeffs()[-1] < 0:
            p, q = -p, -q
    return p, q


class RatFunc:
    """Element of Q(l, r), immutable.

    Internally ``num / den`` with ``num`` and ``den`` coprime integer
    polynomials and the lexicographically least term of ``den`` positive.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1):
        p, q = _as_pair(num)
        if not (isinstance(den, int) and den == 1):
            p2, q2 = _as_pair(den)
            p, q = p * q2, q * p2
        self._num, self._den = _reduce(p, q)
        self._hash = None

    @classmethod
    def _raw(cls, p, q) -> "RatFunc":
        obj = cls.__new__(cls)
        obj._num = p
        obj._den = q
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, p, q) -> "RatFunc":
        return cls._raw(*_reduce(p, q))

    @classmethod
    def from_laurent(cls, num: LaurentPoly, den: LaurentPoly | None = None) -> "RatFunc":
        return cls(num, 1 if den is None else den)

    # -- views ---------------------------------------------------------------
    def _laurent_shift(self) -> Monomial:
        a, b = self._den.monoms()[-1]
        return (-int(a), -int(b))

    @property
    def numerator(self) -> LaurentPoly:
        """Laurent numerator under the canonical unit normalisation."""
        return LaurentPoly.from_mpoly(self._num, self._laurent_shift())

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly.from_mpoly(self._den, self._laurent_shift())

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        return self._num.is_constant() and self._den.is_constant()

    def is_laurent(self) -> bool:
        """True when the denominator is a monomial."""
        return len(self._den.monoms()) == 1

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(self._num.coefficient(0)) if not self._num.is_zero() else 0,
                        int(self._den.coefficient(0)))

    def mpoly_pair(self):
        """The reduced ``(num, den)`` FLINT polynomials (no Laurent shift)."""
        return self._num, self._den

    def size(self) -> int:
        """Number of monomials in numerator and denominator (pivot heuristic)."""
        return len(self._num.monoms()) + len(self._den.monoms())

    # -- arithmetic ----------------------------------------------------------
    def __bool__(self) -> bool:
        return not self._num.is_zero()

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self._num, self._den)

    def __add__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        p1, q1 = self._num, self._den
        p2, q2 = o
        if p2.is_zero():
            return self
        if p1.is_zero():
            return RatFunc._raw(p2, q2) if isinstance(other, RatFunc) else RatFunc._make(p2, q2)
        if q1 == q2:
            return RatFunc._make(p1 + p2, q1)
        return RatFunc._make(p1 * q2 + p2 * q1, q1 * q2)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + RatFunc._raw(-o[0], o[1])

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        p1, q1 = self._num, self._den
        p2, q2 = o
        if p1.is_zero() or p2.is_zero():
            return ZERO
        if q1.is_one() and q2.is_one():
            return RatFunc._raw(p1 * p2, _P1)
        g1 = p1.gcd(q2)
        g2 = p2.gcd(q1)
        if not g1.is_one():
            p1 = p1 / g1
            q2 = q2 / g1
        if not g2.is_one():
            p2 = p2 / g2
            q1 = q1 / g2
        p, q = p1 * p2, q1 * q2
        if q.coeffs()[-1] < 0:
            p, q = -p, -q
        return RatFunc._raw(p, q)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self._num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        p, q = self._den, self._num
        if q.coeffs()[-1] < 0:
            p, q = -p, -q
        return RatFunc._raw(p, q)

    def __truediv__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o[0].is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * RatFunc._raw(o[1], o[0])

    def __rtruediv__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc._raw(*o) * self.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self._num ** e, self._den ** e)

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not isinstance(other, RatFunc):
            o = _reduce(*o)
        return self._num == o[0] and self._den == o[1]

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((tuple(self._num.terms()), tuple(self._den.terms())))
        return self._hash

    def __str__(self) -> str:
        num, den = self.numerator, self.denominator
        if den == 1:
            return str(num)
        ns, ds = str(num), str(den)
        if len(num) > 1:
            ns = f"({ns})"
        if len(den) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"

    def to_json(self) -> dict[str, str]:
        return {"num": str(self.numerator), "den": str(self.denominator)}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "RatFunc":
        return cls(LaurentPoly.parse(obj["num"]), LaurentPoly.parse(obj["den"]))


def _laurent_pair(lp: LaurentPoly):
    p, (a, b) = lp.to_mpoly()
    num_shift = {(max(a, 0), max(b, 0)): 1}
    den_shift = {(max(-a, 0), max(-b, 0)): 1}
    return p * _CTX.from_dict(num_shift), _CTX.from_dict(den_shift)


def _as_pair(x):
    if isinstance(x, LaurentPoly):
        return _laurent_pair(x)
    o = _coerce(x)
    if o is None:
        if isinstance(x, flint.fmpz_mpoly):
            return x, _P1
        raise TypeError(f"cannot convert {type(x).__name__} to RatFunc")
    return o


def _coerce(x):
    if isinstance(x, RatFunc):
        return x._num, x._den
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return _CTX.constant(x), _P1
    if isinstance(x, Rational):
        return _CTX.constant(int(x.numerator)), _CTX.constant(int(x.denominator))
    if isinstance(x, LaurentPoly):
        return _laurent_pair(x)
    return None


L = RatFunc(LaurentPoly.monomial(1, 0))
R = RatFunc(LaurentPoly.monomial(0, 1))
ONE = RatFunc(1)
ZERO = RatFunc(0)
M = R.inverse() - R


# ---------------------------------------------------------------------------
# Specializations

Scalar = Union[RatFunc, Fraction]


@dataclass(frozen=True)
class ParamSpec:
    """How the parameters ``l`` and ``r`` are specialized.

    ``mode`` is ``"generic"`` (both symbolic), ``"lsubst"`` (``l`` replaced by
    ``sign * r^k``, ``r`` symbolic) or ``"numeric"`` (both exact rationals).
    ``guard_n`` is the ``n`` for which the Hecke semisimplicity guard
    ``r^(2k) != 1, k = 1..n`` is to be checked.
    """

    mode: str = "generic"
    sign: int = 1
    k: int = 0
    l: Fraction | None = None
    r: Fraction | None = None
    guard_n: int | None = None

    def __post_init__(self):
        if self.mode not in ("generic", "lsubst", "numeric"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "lsubst" and self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.mode == "numeric":
            if self.l is None or self.r is None:
                raise ValueError("numeric mode needs both l and r")
            object.__setattr__(self, "l", Fraction(self.l))
            object.__setattr__(self, "r", Fraction(self.r))
            if self.l == 0 or self.r == 0:
                raise ValueError("l and r must be nonzero")

    @classmethod
    def generic(cls, guard_n: int | None = None) -> "ParamSpec":
        return cls("generic", guard_n=guard_n)

    @classmethod
    def lsubst(cls, sign: int, k: int, guard_n: int | None = None) -> "ParamSpec":
        return cls("lsubst", sign=sign, k=k, guard_n=guard_n)

    @classmethod
    def numeric(cls, l, r, guard_n: int | None = None) -> "ParamSpec":
        return cls("numeric", l=Fraction(l), r=Fraction(r), guard_n=guard_n)

    @property
    def is_numeric(self) -> bool:
        return self.mode == "numeric"

    def scalars(self) -> tuple[Scalar, Scalar]:
        """Values of ``(l, r)`` in the target field of the specialization."""
        if self.mode == "generic":
            return L, R
        if self.mode == "lsubst":
            return self.sign * R ** self.k, R
        return self.l, self.r

    def describe(self) -> str:
        if self.mode == "generic":
            return "generic"
        if self.mode == "lsubst":
            return f"l={'-' if self.sign < 0 else ''}r^{self.k}"
        return f"l={self.l},r={self.r}"


def specialize(x: RatFunc, spec: ParamSpec) -> RatFunc:
    """Image of ``x`` under the specialization homomorphism ``spec``."""
    if not isinstance(x, RatFunc):
        x = RatFunc(x)
    if spec.mode == "generic":
        return x
    num, den = x.numerator, x.denominator
    if spec.mode == "lsubst":
        sign, k = spec.sign, spec.k
        sub = lambda a, b: (sign ** (a % 2), 0, k * a + b)
        num, den = num.map_monomials(sub), den.map_monomials(sub)
        if not den:
            raise PoleAtSpecialization(f"denominator of {x} vanishes at {spec.describe()}")
        return RatFunc(num, den)
    d = den.evaluate(spec.l, spec.r)
    if d == 0:
        raise PoleAtSpecialization(f"denominator of {x} vanishes at {spec.describe()}")
    return RatFunc(num.evaluate(spec.l, spec.r) / d)


def conjugate(x: RatFunc) -> RatFunc:
    """The substitution ``r -> -1/r`` (fixes ``l`` and ``m = 1/r - r``)."""
    if not isinstance(x, RatFunc):
        return RatFunc(x)
    sub = lambda a, b: ((-1) ** (b % 2), a, -b)
    return RatFunc(x.numerator.map_monomials(sub), x.denominator.map_monomials(sub))


def guard_check(spec: ParamSpec, n: int | None = None) -> bool:
    """Hecke semisimplicity guard: ``r^(2k) != 1`` for ``k = 1..n``.

    Symbolic ``r`` passes vacuously.
    """
    n = spec.guard_n if n is None else n
    if spec.mode != "numeric" or n is None:
        return True
    r2 = spec.r * spec.r
    return all(r2 ** k != 1 for k in range(1, n + 1))
