"""The Lawrence-Krammer representation of the BMW algebra of type A_{n-1}.

The representation space has basis ``x_beta`` indexed by positive roots
(see :mod:`bmwlk.rootsys`); matrices act on column vectors, so column
``beta`` of ``nu_k`` holds the coordinates of ``nu_k(x_beta)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .exact import ParamSpec, PoleAtSpecialization, R, RatFunc
from .exactla import Matrix, det, mat_inverse
from .report import Report
from .rootsys import (
    CaseTag,
    InvalidN,
    classify,
    enumerate_roots,
    minus_simple,
    plus_simple,
    root_index,
)

__all__ = [
    "Letter",
    "BMWWord",
    "LKRep",
    "build_nu",
    "build_e",
    "build_rep",
    "eval_word",
    "apply_word",
    "cij_word",
    "build_cij",
    "verify_relations",
    "det_g1_recursion_check",
    "hecke_degree_matrices",
    "fact1_matrices",
    "hecke_relations",
]


def _parameters(spec: ParamSpec, conjugated: bool):
    l, r = spec.scalars()
    if conjugated:
        r = -1 / r
    m = 1 / r - r
    if not m:
        raise PoleAtSpecialization(f"m = 1/r - r vanishes at {spec.describe()}")
    return l, r, m


def _check_index(n: int, k: int) -> None:
    if n < 2:
        raise InvalidN(f"n must be at least 2, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range 1..{n - 1}")


def build_nu(n: int, k: int, spec: ParamSpec | None = None, conjugated: bool = False) -> Matrix:
    """Matrix of ``g_k``."""
    _check_index(n, k)
    l, r, m = _parameters(spec or ParamSpec.generic(), conjugated)
    roots = enumerate_roots(n)
    idx = root_index(n)
    N = len(roots)
    rows = [[0] * N for _ in range(N)]
    simple = idx[(k, k + 1)]
    for col, beta in enumerate(roots):
        ht = beta.j - beta.i
        tag = classify(beta, k)
        if tag is CaseTag.A_zero:
            rows[col][col] = r
        elif tag is CaseTag.B_simple:
            rows[col][col] = 1 / l
        elif tag is CaseTag.C_c:
            rows[idx[plus_simple(beta, k)]][col] = 1
        elif tag is CaseTag.C_cprime:
            rows[idx[plus_simple(beta, k)]][col] = 1
            rows[simple][col] = m * r ** (ht - 1)
            rows[col][col] = -m
        elif tag is CaseTag.D_d:
            rows[idx[minus_simple(beta, k)]][col] = 1
            rows[simple][col] = m / (l * r ** (ht - 2))
            rows[col][col] = -m
        else:
            rows[idx[minus_simple(beta, k)]][col] = 1
    return Matrix(rows)


def build_e(n: int, k: int, spec: ParamSpec | None = None, conjugated: bool = False) -> Matrix:
    """Matrix of ``e_k``; every column is a multiple of ``x_{alpha_k}``."""
    _check_index(n, k)
    l, r, m = _parameters(spec or ParamSpec.generic(), conjugated)
    roots = enumerate_roots(n)
    N = len(roots)
    simple = root_index(n)[(k, k + 1)]
    row = [0] * N
    for col, beta in enumerate(roots):
        ht = beta.j - beta.i
        tag = classify(beta, k)
        if tag is CaseTag.B_simple:
            row[col] = 1 - (l - 1 / l) / m
        elif tag is CaseTag.C_c:
            row[col] = r ** (1 - ht)
        elif tag is CaseTag.C_cprime:
            row[col] = r ** (ht - 1)
        elif tag is CaseTag.D_d:
            row[col] = 1 / (l * r ** (ht - 2))
        elif tag is CaseTag.D_dprime:
            row[col] = l * r ** (ht - 2)
    rows = [[0] * N for _ in range(N)]
    rows[simple] = row
    return Matrix(rows)


class LKRep:
    """Images of the BMW generators at a parameter specialization.

    ``nu[k-1]`` and ``e[k-1]`` are the matrices of ``g_k`` and ``e_k``.
    With ``conjugated=True`` the formulas use ``-1/r`` in place of ``r``
    (the conjugate representation); ``l`` and ``m`` are unchanged.
    """

    def __init__(self, n: int, spec: ParamSpec | None = None, conjugated: bool = False):
        if n < 2:
            raise InvalidN(f"n must be at least 2, got {n}")
        self.n = n
        self.spec = spec or ParamSpec.generic()
        self.conjugated = conjugated
        self.l, self.r, self.m = _parameters(self.spec, conjugated)
        self.roots = enumerate_roots(n)
        self.nu = tuple(build_nu(n, k, self.spec, conjugated) for k in range(1, n))
        self.e = tuple(build_e(n, k, self.spec, conjugated) for k in range(1, n))
        self._inv: dict[int, Matrix] = {}
        self._cij: dict[tuple[int, int], Matrix] = {}

    @property
    def dim(self) -> int:
        return len(self.roots)

    def identity(self) -> Matrix:
        return Matrix.identity(self.dim)

    def G(self, k: int) -> Matrix:
        return self.nu[k - 1]

    def E(self, k: int) -> Matrix:
        return self.e[k - 1]

    def Ginv(self, k: int) -> Matrix:
        """``g_k^{-1} = g_k + m - m e_k``."""
        if k not in self._inv:
            G, E = self.G(k), self.E(k)
            self._inv[k] = G + self.identity().scale(self.m) - E.scale(self.m)
        return self._inv[k]

    def cij(self, i: int, j: int) -> Matrix:
        if (i, j) not in self._cij:
            self._cij[(i, j)] = eval_word(self, cij_word(i, j))
        return self._cij[(i, j)]

    def __repr__(self) -> str:
        conj = ", conjugated" if self.conjugated else ""
        return f"LKRep(n={self.n}, {self.spec.describe()}{conj})"


def build_rep(n: int, spec: ParamSpec | None = None, conjugated: bool = False) -> LKRep:
    return LKRep(n, spec, conjugated)


# ---------------------------------------------------------------------------
# words


class Letter(NamedTuple):
    k: int
    kind: str  # "g", "ginv" or "e"

    def __str__(self) -> str:
        return {"g": f"g{self.k}", "ginv": f"g{self.k}^-1", "e": f"e{self.k}"}[self.kind]


@dataclass(frozen=True)
class BMWWord:
    """A product of generators, written left to right as in the algebra."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "BMWWord":
        """Parse e.g. ``"g2 e1 g2^-1"``."""
        letters = []
        for tok in text.split():
            kind = "e" if tok[0] == "e" else "g"
            if tok[0] not in "ge":
                raise ValueError(f"bad letter {tok!r}")
            body = tok[1:]
            if body.endswith("^-1"):
                if kind == "e":
                    raise ValueError("e_i is not invertible")
                kind, body = "ginv", body[:-3]
            letters.append(Letter(int(body), kind))
        return cls(tuple(letters))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters) or "1"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def _letter_matrix(rep: LKRep, letter: Letter) -> Matrix:
    if not 1 <= letter.k <= rep.n - 1:
        raise ValueError(f"generator index {letter.k} out of range for n={rep.n}")
    if letter.kind == "g":
        return rep.G(letter.k)
    if letter.kind == "ginv":
        return rep.Ginv(letter.k)
    if letter.kind == "e":
        return rep.E(letter.k)
    raise ValueError(f"unknown letter kind {letter.kind!r}")


def eval_word(rep: LKRep, word: BMWWord | Iterable[Letter]) -> Matrix:
    out = rep.identity()
    for letter in word:
        out = out @ _letter_matrix(rep, letter)
    return out


def apply_word(rep: LKRep, word: BMWWord | Iterable[Letter], vec: Sequence) -> list:
    """Action of the word on a vector, letter by letter from the right."""
    out = list(vec)
    for letter in reversed(list(word)):
        out = _letter_matrix(rep, letter).apply(out)
    return out


def cij_word(i: int, j: int) -> BMWWord:
    """``g_{j-1}...g_{i+1} e_i g_{i+1}^{-1}...g_{j-1}^{-1}`` (just ``e_i`` when j = i+1)."""
    if not 1 <= i < j:
        raise ValueError(f"need 1 <= i < j, got ({i}, {j})")
    left = [Letter(k, "g") for k in range(j - 1, i, -1)]
    right = [Letter(k, "ginv") for k in range(i + 1, j)]
    return BMWWord(tuple(left + [Letter(i, "e")] + right))


def build_cij(rep: LKRep, i: int, j: int) -> Matrix:
    if not 1 <= i < j <= rep.n:
        raise ValueError(f"need 1 <= i < j <= {rep.n}, got ({i}, {j})")
    return rep.cij(i, j)


# ---------------------------------------------------------------------------
# relation suite


def _adjacent_pairs(n: int):
    for i in range(1, n):
        for j in (i - 1, i + 1):
            if 1 <= j <= n - 1:
                yield i, j


def verify_relations(rep: LKRep, check_inverse: bool = True) -> Report:
    """Check every defining and derived BMW relation on the matrix images."""
    n, l, m = rep.n, rep.l, rep.m
    I = rep.identity()
    G, E, Gi = rep.G, rep.E, rep.Ginv
    gens = range(1, n)
    rep_report = Report(f"BMW relations, {rep!r}")
    add = rep_report.add

    for i in gens:
        for j in gens:
            if j - i >= 2:
                add("commute", G(i) @ G(j) == G(j) @ G(i), i=i, j=j)
    for i in gens:
        if i + 1 <= n - 1:
            j = i + 1
            add("braid", G(i) @ G(j) @ G(i) == G(j) @ G(i) @ G(j), i=i, j=j)
    for i in gens:
        Gi2 = G(i) @ G(i)
        add("e definition", E(i) == (Gi2 + G(i).scale(m) - I).scale(l / m), i=i)
        add("g e = e / l", G(i) @ E(i) == E(i).scale(1 / l), i=i)
        add("e g = e / l", E(i) @ G(i) == E(i).scale(1 / l), i=i)
        add("quadratic", Gi2 == I - G(i).scale(m) + E(i).scale(m / l), i=i)
        add("inverse", G(i) @ Gi(i) == I and Gi(i) @ G(i) == I, i=i)
        if check_inverse:
            add("inverse by elimination", mat_inverse(G(i)) == Gi(i), i=i)
    for i, j in _adjacent_pairs(n):
        add("e g e = l e", E(i) @ G(j) @ E(i) == E(i).scale(l), i=i, j=j)
        add("g g e = e e", G(i) @ G(j) @ E(i) == E(j) @ E(i), i=i, j=j)
        add(
            "g e e = g e + m(e - e e)",
            G(i) @ E(j) @ E(i) == G(j) @ E(i) + (E(i) - E(j) @ E(i)).scale(m),
            i=i,
            j=j,
        )
        add("e e g", E(j) @ E(i) @ G(j) == E(j) @ Gi(i), i=i, j=j)
        add("e e e", E(i) @ E(j) @ E(i) == E(i), i=i, j=j)
    for i in gens:
        for j in gens:
            if j > i:
                lhs = eval_word(
                    rep,
                    [Letter(j, "e")]
                    + [Letter(k, "g") for k in range(j - 1, i, -1)]
                    + [Letter(k, "e") for k in range(i, 0, -1)],
                )
                rhs = eval_word(
                    rep,
                    [Letter(k, "e") for k in range(j, 0, -1)]
                    + [Letter(k, "ginv") for k in range(j, i + 1, -1)],
                )
                add("e g..g e..e", lhs == rhs, i=i, j=j)
    for i in gens:
        for j in gens:
            if abs(i - j) >= 2:
                add("annihilation e_i e_j = 0", (E(i) @ E(j)).is_zero(), i=i, j=j)
    return rep_report


def det_g1_recursion_check(n_max: int, spec: ParamSpec | None = None) -> Report:
    """``det G_1(3) = -1/l`` and ``det G_1(n) = -r^(n-3) det G_1(n-1)``."""
    if n_max < 3:
        raise InvalidN("n_max must be at least 3")
    spec = spec or ParamSpec.generic()
    l, r, _ = _parameters(spec, False)
    rep_report = Report(f"det G_1(n) recursion up to n={n_max}, {spec.describe()}")
    prev = None
    for n in range(3, n_max + 1):
        d = det(build_nu(n, 1, spec))
        rep_report.info[f"det G_1({n})"] = d
        if n == 3:
            rep_report.add("det G_1(3) = -1/l", d == -1 / l, detail=str(d), n=n)
        else:
            rep_report.add(
                "det G_1(n) = -r^(n-3) det G_1(n-1)", d == -(r ** (n - 3)) * prev, detail=str(d), n=n
            )
        prev = d
    return rep_report


# ---------------------------------------------------------------------------
# Hecke-algebra matrix families


def hecke_degree_matrices(n: int, family: str, r=R) -> list[Matrix]:
    """The matrices of ``g_1..g_{n-1}`` on ``v_1..v_{n-1}`` for a relation family.

    ``family="triangle"``::

        g_t v_i = r v_i            (t not in {i-1, i, i+1})
        g_i v_i = -1/r v_i
        g_{i+1} v_i = r (v_i + v_{i+1})
        g_{i-1} v_i = r v_i + 1/r v_{i-1}

    ``family="nabla"`` swaps ``r`` and ``-1/r`` throughout.
    """
    if n < 3:
        raise InvalidN("n must be at least 3")
    if family not in ("triangle", "nabla"):
        raise ValueError(f"unknown family {family!r}")
    if family == "triangle":
        a, b, side = r, -1 / r, 1 / r
    else:
        a, b, side = -1 / r, r, -r
    dim = n - 1
    mats = []
    for t in range(1, n):
        cols = []
        for i in range(1, n):
            col = [0] * dim
            if i == t:
                col[i - 1] = b
            elif t == i + 1:
                col[i - 1] = a
                col[i] = a
            elif t == i - 1:
                col[i - 1] = a
                col[i - 2] = side
            else:
                col[i - 1] = a
            cols.append(col)
        mats.append(Matrix.from_columns(cols))
    return mats


def fact1_matrices(r=R) -> tuple[list[Matrix], list[Matrix]]:
    """The two degree-5 matrix families ``P_1..P_4`` and ``Q_1..Q_4``."""
    s = 1 / r
    d = r - s
    P = [
        [[r, 0, 0, 0, 0], [0, r, 0, 0, 0], [0, 0, r, 0, 0], [1, 0, -r * r, -s, 0], [0, 1, 0, 0, -s]],
        [[-s, 0, 0, 1, 0], [0, -s, 1, 0, 1], [0, 0, r, 0, 0], [0, 0, 0, r, 0], [0, 0, 0, 0, r]],
        [[r, 0, 0, 0, 0], [0, r, 0, 0, 0], [0, 1, -s, 0, 0], [1, 0, 0, -s, -r * r], [0, 0, 0, 0, r]],
        [[0, 1, -r, 0, 0], [1, d, 1, 0, 0], [0, 0, r, 0, 0], [0, 0, -r * r, 0, 1], [0, 0, r, 1, d]],
    ]
    Q = [
        [[-s, 0, 0, 0, 0], [0, -s, 0, 0, 0], [0, 0, -s, 0, 0], [1, 0, -s * s, r, 0], [0, 1, 0, 0, r]],
        [[r, 0, 0, 1, 0], [0, r, 1, 0, 1], [0, 0, -s, 0, 0], [0, 0, 0, -s, 0], [0, 0, 0, 0, -s]],
        [[-s, 0, 0, 0, 0], [0, -s, 0, 0, 0], [0, 1, r, 0, 0], [1, 0, 0, r, -s * s], [0, 0, 0, 0, -s]],
        [[0, 1, s, 0, 0], [1, d, 1, 0, 0], [0, 0, -s, 0, 0], [0, 0, -s * s, 0, 1], [0, 0, -s, 1, d]],
    ]
    return [Matrix(x) for x in P], [Matrix(x) for x in Q]


def hecke_relations(mats: Sequence[Matrix], r=R, title: str = "Hecke relations") -> Report:
    """Braid relations and ``X^2 + m X = 1`` for a list of matrices."""
    m = 1 / r - r
    k = len(mats)
    I = Matrix.identity(mats[0].rows)
    rep_report = Report(title)
    for a in range(k):
        X = mats[a]
        rep_report.add("quadratic", X @ X + X.scale(m) == I, i=a + 1)
        for b in range(a + 1, k):
            Y = mats[b]
            if b == a + 1:
                rep_report.add("braid", X @ Y @ X == Y @ X @ Y, i=a + 1, j=b + 1)
            else:
                rep_report.add("commute", X @ Y == Y @ X, i=a + 1, j=b + 1)
    return rep_report
