"""Invariant subspaces of the Lawrence-Krammer representation.

The reducibility test rests on one fact: every proper invariant subspace
lies in ``K(n)``, the common kernel of the ``c_ij`` images, and ``K(n)`` is
itself invariant.  So the representation is reducible exactly when
``K(n) != 0``, and no module-decomposition machinery is needed.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import ParamSpec, R, guard_check
from .exactla import Matrix, Subspace, kernel, solve_linear, subspace_intersect
from .lkrep import (
    LKRep,
    apply_word,
    cij_word,
    fact1_matrices,
    hecke_degree_matrices,
    hecke_relations,
)
from .report import Report
from .rootsys import InvalidN, PosRoot, enumerate_roots, root_index

__all__ = [
    "NotInvariant",
    "GuardViolation",
    "NamedVector",
    "ReducibilityVerdict",
    "thm4_vector",
    "thm4_n3_vectors",
    "thm5_vectors",
    "thm5_n4_u_vectors",
    "prop3_vectors",
    "compute_K",
    "annihilated_by_e",
    "decide_reducible",
    "exceptional_l_values",
    "one_dim_invariant_subspaces",
    "equivariant_endomorphisms",
    "has_invariant_complement",
    "relation_family_check",
    "check_thm4",
    "check_thm5",
    "check_prop3",
    "membership_checks",
    "cij_rules_check",
    "check_indecomposable",
    "scan_main_theorem",
    "scan_conjugate",
    "hecke_equivalence_witness",
    "k5_trace_profile",
    "DEFAULT_PROBES",
    "SPECIAL_DIMENSIONS_N8",
]

# Dimensions of irreducible invariant subspaces that can occur for n = 8.
SPECIAL_DIMENSIONS_N8 = (1, 7, 14, 20, 21)

DEFAULT_PROBES = (Fraction(3), Fraction(5), Fraction(7), Fraction(-3), Fraction(1, 3), Fraction(2, 5))


class NotInvariant(ValueError):
    pass


class GuardViolation(ValueError):
    pass


@dataclass(frozen=True)
class NamedVector:
    label: str
    n: int
    coords: tuple

    @classmethod
    def from_terms(cls, label: str, n: int, terms: dict[tuple[int, int], object]) -> "NamedVector":
        idx = root_index(n)
        coords: list = [0] * len(idx)
        for (i, j), c in terms.items():
            coords[idx[PosRoot(i, j)]] += c
        return cls(label, n, tuple(coords))

    def terms(self) -> dict[PosRoot, object]:
        return {b: c for b, c in zip(enumerate_roots(self.n), self.coords) if c}

    def __str__(self) -> str:
        body = " + ".join(f"({c})*{b.label()}" for b, c in self.terms().items()) or "0"
        return f"{self.label} = {body}"


@dataclass(frozen=True)
class ReducibilityVerdict:
    n: int
    spec: ParamSpec
    k_dim: int
    reducible: bool
    guard_ok: bool
    conjugated: bool = False


# ---------------------------------------------------------------------------
# explicit vectors


def thm4_vector(n: int, r=R) -> NamedVector:
    """``u = sum_{s<t} r^(s+t) w_{s,t}``, the common eigenvector at ``l = 1/r^(2n-3)``."""
    if n < 3:
        raise InvalidN("n must be at least 3")
    return NamedVector.from_terms("Thm4_u", n, {(s, t): r ** (s + t) for s, t in enumerate_roots(n)})


def thm4_n3_vectors(r=R) -> tuple[NamedVector, NamedVector]:
    """The two n = 3 eigenvectors, for ``l = 1/r^3`` and ``l = -r^3``."""
    s = 1 / r
    u_r = NamedVector.from_terms("Thm4_u_r", 3, {(1, 2): 1, (1, 3): r, (2, 3): r * r})
    u_m = NamedVector.from_terms("Thm4_u_-1/r", 3, {(1, 2): 1, (1, 3): -s, (2, 3): s * s})
    return u_r, u_m


def thm5_vectors(n: int, sign: int, r=R) -> list[NamedVector]:
    """The ``n-1`` vectors spanning the irreducible ``(n-1)``-dimensional subspace.

    Valid at ``l = sign / r^(n-3)``; for n = 4 this is ``l = +-1/r``.
    """
    if n < 3:
        raise InvalidN("n must be at least 3")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s = 1 / r
    inv_l = sign * r ** (n - 3)
    out = []
    for i in range(1, n):
        terms: dict[tuple[int, int], object] = {}

        def add(key, c):
            terms[key] = terms.get(key, 0) + c

        add((i, i + 1), s - inv_l)
        for t in range(i + 2, n + 1):
            c = r ** (t - i - 2)
            add((i, t), c)
            add((i + 1, t), -c * s)
        for t in range(1, i):
            c = sign * r ** (n - i - 2 + t)
            add((t, i), c)
            add((t, i + 1), -c * s)
        out.append(NamedVector.from_terms(f"Thm5_v_{i}", n, terms))
    return out


def thm5_n4_u_vectors(r=R, corrected: bool = False) -> list[NamedVector]:
    """The n = 4 spanning vectors at ``l = -r^3``, as printed.

    The printed ``u3`` has ``r + 1/r^3`` as its ``w_{1,2}`` coefficient; the
    relations force ``r + r^3`` (it is ``-r g_3(u2) - u2``).  Pass
    ``corrected=True`` for that vector.
    """
    s = 1 / r
    c12 = r + r**3 if corrected else r + s**3
    return [
        NamedVector.from_terms(
            "Thm5_u1", 4, {(2, 3): r, (1, 3): 1, (3, 4): s + s**3, (2, 4): -1, (1, 4): -s}
        ),
        NamedVector.from_terms(
            "Thm5_u2", 4, {(1, 2): -r, (1, 3): -r * r, (3, 4): -s, (2, 4): -s * s, (1, 4): r + s}
        ),
        NamedVector.from_terms(
            "Thm5_u3", 4, {(1, 2): c12, (2, 3): s, (1, 3): -1, (2, 4): 1, (1, 4): -r}
        ),
    ]


def prop3_vectors(r=R) -> tuple[NamedVector, NamedVector]:
    """The basis of ``K(4)`` at ``l = r``."""
    s = 1 / r
    v1 = NamedVector.from_terms("Prop3_v1", 4, {(1, 3): 1, (2, 3): -s, (2, 4): s * s, (1, 4): -s})
    v2 = NamedVector.from_terms("Prop3_v2", 4, {(1, 2): 1, (1, 3): -s, (2, 4): -s, (3, 4): s * s})
    return v1, v2


def _embed(vec: NamedVector, n: int) -> list:
    """Coordinates of a vector from a smaller strand count inside ``V(n)``."""
    if n < vec.n:
        raise InvalidN(f"cannot embed a vector of V({vec.n}) in V({n})")
    return list(NamedVector.from_terms(vec.label, n, dict(vec.terms())).coords)


def _spec_r(rep: LKRep):
    """``r`` as seen by formulas written for the unconjugated representation."""
    return rep.spec.scalars()[1]


# ---------------------------------------------------------------------------
# K(n) and the reducibility decision


def compute_K(rep: LKRep) -> Subspace:
    """``K(n)``: the common kernel of all ``nu(c_ij)``.

    Each ``nu(c_ij)`` has image spanned by ``w_ij``, so only that row is
    needed.
    """
    idx = root_index(rep.n)
    rows = []
    for beta in rep.roots:
        c = rep.cij(beta.i, beta.j)
        k = idx[beta]
        for a in range(rep.dim):
            if a != k and any(c[a, b] for b in range(rep.dim)):
                raise AssertionError(f"c_{beta.i}{beta.j} has image outside w_{beta.i}{beta.j}")
        rows.append(c.row(k))
    K = kernel(Matrix(rows, cols=rep.dim))
    for k in range(1, rep.n):
        if not K.is_invariant(rep.G(k)):
            raise NotInvariant(f"K({rep.n}) is not invariant under g_{k}")
    return K


def annihilated_by_e(rep: LKRep, W: Subspace) -> bool:
    return all(not any(rep.E(k).apply(list(b))) for k in range(1, rep.n) for b in W.basis)


def decide_reducible(n: int, spec: ParamSpec, conjugated: bool = False) -> ReducibilityVerdict:
    rep = LKRep(n, spec, conjugated)
    K = compute_K(rep)
    return ReducibilityVerdict(n, spec, K.dim, K.dim > 0, guard_check(spec, n), conjugated)


def exceptional_l_values(n: int, r, conjugated: bool = False) -> list:
    """Values of ``l`` at which the (conjugate) representation is reducible."""
    if n < 3:
        raise InvalidN("n must be at least 3")
    if n == 3:
        # conjugation permutes this set
        return [-r**3, 1 / r**3, r**0, -(r**0)]
    if conjugated:
        return [-1 / r, 1 / r**3, -(r ** (2 * n - 3)), r ** (n - 3), -(r ** (n - 3))]
    return [r, -(r**3), 1 / r ** (2 * n - 3), 1 / r ** (n - 3), -1 / r ** (n - 3)]


def one_dim_invariant_subspaces(rep: LKRep) -> dict[str, Subspace]:
    """Common eigenvectors of all ``nu_i`` for the eigenvalues ``r`` and ``-1/r``."""
    r = rep.r
    I = rep.identity()
    out = {}
    for name, gamma in (("r", r), ("-1/r", -1 / r)):
        common = Subspace.full(rep.dim)
        for k in range(1, rep.n):
            common = subspace_intersect(common, kernel(rep.G(k) - I.scale(gamma)))
            if common.dim == 0:
                break
        out[name] = common
    return out


# ---------------------------------------------------------------------------
# intertwiners


def equivariant_endomorphisms(rep: LKRep) -> Subspace:
    """All ``X`` with ``X nu_i = nu_i X``, as vectors ``vec(X)`` (row-major)."""
    N = rep.dim
    rows = []
    for k in range(1, rep.n):
        A = rep.G(k)
        for a in range(N):
            for b in range(N):
                # (X A - A X)[a][b]
                row: list = [0] * (N * N)
                for c in range(N):
                    if A[c, b]:
                        row[a * N + c] += A[c, b]
                    if A[a, c]:
                        row[c * N + b] -= A[a, c]
                if any(row):
                    rows.append(row)
    return kernel(Matrix(rows, cols=N * N))


def vec_to_matrix(v: Sequence, N: int) -> Matrix:
    return Matrix([list(v[a * N:(a + 1) * N]) for a in range(N)])


def has_invariant_complement(rep: LKRep, W: Subspace) -> bool:
    """Whether ``W`` has an invariant complement.

    Equivalent to an equivariant projection ``P = B C`` onto ``W`` where the
    columns of ``B`` span ``W``: ``C B = 1`` and ``C nu_i = A_i C`` with
    ``A_i`` the restriction of ``nu_i`` to ``W``.  Both are linear in ``C``.
    """
    N = rep.dim
    for k in range(1, rep.n):
        if not W.is_invariant(rep.G(k)):
            raise NotInvariant(f"subspace is not invariant under g_{k}")
    d = W.dim
    if d in (0, N):
        return True
    B = W.matrix()
    var = lambda p, q: p * N + q  # noqa: E731  C[p][q]
    rows, rhs = [], []
    for p in range(d):
        for q in range(d):
            row: list = [0] * (d * N)
            for c in range(N):
                if B[c, q]:
                    row[var(p, c)] = B[c, q]
            rows.append(row)
            rhs.append(1 if p == q else 0)
    for k in range(1, rep.n):
        G = rep.G(k)
        A = W.restrict(G)
        for p in range(d):
            for q in range(N):
                row = [0] * (d * N)
                for c in range(N):
                    if G[c, q]:
                        row[var(p, c)] += G[c, q]
                for c in range(d):
                    if A[p, c]:
                        row[var(c, q)] -= A[p, c]
                if any(row):
                    rows.append(row)
                    rhs.append(0)
    return solve_linear(Matrix(rows, cols=d * N), rhs) is not None


# ---------------------------------------------------------------------------
# explicit invariant vectors


def relation_family_check(
    rep: LKRep, vectors: Sequence[NamedVector], family: str, title: str
) -> Report:
    """Check ``nu_t(v_i) = sum_k M_t[k, i] v_k`` for the chosen Hecke relation family."""
    n = rep.n
    mats = hecke_degree_matrices(n, family, _spec_r(rep))
    report = Report(title)
    vecs = [list(v.coords) for v in vectors]
    for t in range(1, n):
        M = mats[t - 1]
        for i in range(1, n):
            lhs = rep.G(t).apply(vecs[i - 1])
            rhs: list = [0] * rep.dim
            for k in range(1, n):
                c = M[k - 1, i - 1]
                if c:
                    rhs = [x + c * y for x, y in zip(rhs, vecs[k - 1])]
            report.add(f"{family} relation", all(a == b for a, b in zip(lhs, rhs)), t=t, i=i)
    report.add(
        "linearly independent", Subspace.span(vecs, rep.dim).dim == len(vecs), count=len(vecs)
    )
    return report


def _eigen_checks(report: Report, rep: LKRep, vec: NamedVector, gamma, gamma_name: str) -> None:
    v = list(vec.coords)
    target = [gamma * x for x in v]
    for k in range(1, rep.n):
        report.add(
            f"g_k {vec.label} = {gamma_name} {vec.label}",
            all(a == b for a, b in zip(rep.G(k).apply(v), target)),
            k=k,
            spec=rep.spec.describe(),
        )


def check_thm4(n: int) -> Report:
    """Common eigenvectors at the one-dimensional reducibility points, symbolic in r."""
    report = Report(f"one-dimensional invariant subspace, n={n}")
    if n == 3:
        u_r, u_m = thm4_n3_vectors()
        _eigen_checks(report, LKRep(3, ParamSpec.lsubst(1, -3)), u_r, R, "r")
        _eigen_checks(report, LKRep(3, ParamSpec.lsubst(-1, 3)), u_m, -1 / R, "-1/r")
        _eigen_checks(report, LKRep(3, ParamSpec.lsubst(1, -3)), thm4_vector(3), R, "r")
    else:
        _eigen_checks(report, LKRep(n, ParamSpec.lsubst(1, -(2 * n - 3))), thm4_vector(n), R, "r")
    return report


def check_thm5(n: int) -> Report:
    """The ``(n-1)``-dimensional subspaces at ``l = +-1/r^(n-3)`` (and ``-r^3`` for n = 4)."""
    report = Report(f"(n-1)-dimensional invariant subspace, n={n}")
    for sign in (1, -1):
        rep = LKRep(n, ParamSpec.lsubst(sign, -(n - 3)))
        report.extend(relation_family_check(rep, thm5_vectors(n, sign), "triangle", ""))
    if n == 4:
        rep = LKRep(4, ParamSpec.lsubst(-1, 3))
        for corrected in (False, True):
            sub = relation_family_check(rep, thm5_n4_u_vectors(corrected=corrected), "nabla", "")
            for c in sub.checks:
                c.params["u3"] = "corrected" if corrected else "printed"
            report.extend(sub)
    return report


def check_prop3(r_value=None) -> Report:
    """``K(4) = span(v1, v2)`` at ``l = r``, numerically at ``r_value`` or symbolically."""
    spec = ParamSpec.lsubst(1, 1) if r_value is None else ParamSpec.numeric(r_value, r_value)
    rep = LKRep(4, spec)
    r = _spec_r(rep)
    v1, v2 = prop3_vectors(r)
    a, b = list(v1.coords), list(v2.coords)
    report = Report(f"two-dimensional invariant subspace at l = r, {spec.describe()}")
    K = compute_K(rep)
    report.info["dim K(4)"] = K.dim
    report.add("dim K(4) = 2", K.dim == 2)
    report.add("K(4) = span(v1, v2)", K == Subspace.span([a, b], rep.dim))
    report.add("v1, v2 independent", Subspace.span([a, b], rep.dim).dim == 2)
    s = -1 / r

    def eq(u, w):
        return all(x == y for x, y in zip(u, w))

    comb = lambda x, u, y, w: [x * p + y * q for p, q in zip(u, w)]  # noqa: E731
    G = rep.G
    report.add("g1 v1 = -1/r v1", eq(G(1).apply(a), comb(s, a, 0, b)))
    report.add("g2 v2 = -1/r v2", eq(G(2).apply(b), comb(0, a, s, b)))
    report.add("g3 v1 = -1/r v1", eq(G(3).apply(a), comb(s, a, 0, b)))
    report.add("g1 v2 = v1 + r v2", eq(G(1).apply(b), comb(1, a, r, b)))
    report.add("g3 v2 = v1 + r v2", eq(G(3).apply(b), comb(1, a, r, b)))
    report.add("g2 v1 = r v1 + v2", eq(G(2).apply(a), comb(r, a, 1, b)))
    report.add("E_i annihilate K(4)", annihilated_by_e(rep, K))
    return report


def _kills(rep: LKRep, vec: list) -> list[tuple[int, int, bool]]:
    out = []
    for beta in rep.roots:
        img = apply_word(rep, cij_word(beta.i, beta.j), vec)
        out.append((beta.i, beta.j, not any(img)))
    return out


def membership_checks(n: int, which: Sequence[str] = ("v1", "u1")) -> Report:
    """``v1 in K(n)`` at ``l = r`` and ``u1 in K(n)`` at ``l = -r^3``, symbolic in r."""
    if n < 4:
        raise InvalidN("n must be at least 4")
    report = Report(f"membership in K(n), n={n}")
    cases = {
        "v1": (ParamSpec.lsubst(1, 1), prop3_vectors()[0]),
        "u1": (ParamSpec.lsubst(-1, 3), thm5_n4_u_vectors()[0]),
    }
    for name in which:
        spec, vec = cases[name]
        rep = LKRep(n, spec)
        for i, j, ok in _kills(rep, _embed(vec, n)):
            report.add(f"c_ij {name} = 0", ok, i=i, j=j, l=spec.describe())
    return report


def cij_rules_check(n: int, spec: ParamSpec | None = None) -> Report:
    """Closed forms for ``nu(c_ij)`` on the basis vectors ``w_{i,j-k}``, ``w_{i-k,i}``, ``w_{i-t,j-s}``."""
    if n < 3:
        raise InvalidN("n must be at least 3")
    spec = spec or ParamSpec.generic()
    rep = LKRep(n, spec)
    l, r = rep.l, rep.r
    idx = root_index(n)
    report = Report(f"c_ij rules, n={n}, {spec.describe()}")

    def image(C: Matrix, a: int, b: int):
        col = C.column(idx[PosRoot(a, b)])
        return col

    def expect(coef, i, j):
        v: list = [0] * rep.dim
        v[idx[PosRoot(i, j)]] = coef
        return v

    for beta in rep.roots:
        i, j = beta
        C = rep.cij(i, j)
        for k in range(1, j - i):
            got = image(C, i, j - k)
            want = expect(1 / (l * r ** (k - 1)), i, j)
            report.add("R_k", all(x == y for x, y in zip(got, want)), i=i, j=j, k=k)
        for k in range(1, i):
            got = image(C, i - k, i)
            want = expect(1 / r ** ((k - 1) + (j - i - 1)), i, j)
            report.add("L_{j-i,k}", all(x == y for x, y in zip(got, want)), i=i, j=j, k=k)
        for t in range(1, i):
            for s in range(1, j - i):
                got = image(C, i - t, j - s)
                coef = (1 / r ** (t + s - 1) - 1 / r ** (t + s - 3)) * (1 / l - 1 / r)
                want = expect(coef, i, j)
                report.add("C_{t,s}", all(x == y for x, y in zip(got, want)), i=i, j=j, t=t, s=s)
    return report


def check_indecomposable(n: int, spec: ParamSpec, conjugated: bool = False) -> Report:
    """At a reducible point: ``K(n) != 0`` and ``K(n)`` has no invariant complement."""
    rep = LKRep(n, spec, conjugated)
    K = compute_K(rep)
    report = Report(f"indecomposability, n={n}, {spec.describe()}")
    report.info["dim K(n)"] = K.dim
    report.add("K(n) != 0", K.dim > 0)
    report.add("E_i annihilate K(n)", annihilated_by_e(rep, K))
    report.add("K(n) has no invariant complement", K.dim > 0 and not has_invariant_complement(rep, K))
    return report


# ---------------------------------------------------------------------------
# scans


def _jobs() -> int:
    try:
        return max(1, int(os.environ.get("BMWLK_JOBS", "1")))
    except ValueError:
        return 1


def _verdict_task(args):
    n, l, r, conjugated = args
    return decide_reducible(n, ParamSpec.numeric(l, r), conjugated)


def _scan(n: int, r_value, extra_l: Iterable, conjugated: bool) -> Report:
    r = Fraction(r_value)
    if not guard_check(ParamSpec.numeric(1, r), n):
        raise GuardViolation(f"r = {r} violates r^(2k) != 1 for k <= {n}")
    listed = exceptional_l_values(n, r, conjugated)
    points: list[Fraction] = []
    for l in list(listed) + [Fraction(x) for x in extra_l]:
        if l not in points:
            points.append(l)
    tasks = [(n, l, r, conjugated) for l in points]
    jobs = _jobs()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_verdict_task, tasks))
    else:
        verdicts = [_verdict_task(t) for t in tasks]
    kind = "conjugate" if conjugated else "main"
    report = Report(f"reducibility scan ({kind}), n={n}, r={r}")
    rows = []
    for l, v in zip(points, verdicts):
        predicted = l in listed
        rows.append(
            {
                "n": n,
                "l": str(l),
                "r": str(r),
                "k_dim": v.k_dim,
                "reducible": v.reducible,
                "predicted": predicted,
                "agree": v.reducible == predicted,
            }
        )
        report.add("verdict matches prediction", v.reducible == predicted, detail=f"dim K = {v.k_dim}", l=l)
    report.info["rows"] = rows
    return report


def scan_main_theorem(n: int, r_value, extra_l: Iterable = ()) -> Report:
    return _scan(n, r_value, extra_l, False)


def scan_conjugate(n: int, r_value, extra_l: Iterable = ()) -> Report:
    return _scan(n, r_value, extra_l, True)


# ---------------------------------------------------------------------------
# Hecke-algebra witnesses


def hecke_equivalence_witness(n: int) -> Report:
    """Trace comparison of the two degree ``n-1`` Hecke representations."""
    if n < 3:
        raise InvalidN("n must be at least 3")
    report = Report(f"degree n-1 Hecke representations, n={n}")
    tri = hecke_degree_matrices(n, "triangle")
    nab = hecke_degree_matrices(n, "nabla")
    report.extend(hecke_relations(tri, title=""))
    report.extend(hecke_relations(nab, title=""))
    t_tri = {str(M.trace()) for M in tri}
    t_nab = {str(M.trace()) for M in nab}
    report.info["triangle traces"] = ", ".join(sorted(t_tri))
    report.info["nabla traces"] = ", ".join(sorted(t_nab))
    report.add("triangle trace constant", len(t_tri) == 1)
    report.add("nabla trace constant", len(t_nab) == 1)
    report.add("triangle trace = (n-2) r - 1/r", tri[0].trace() == (n - 2) * R - 1 / R)
    report.add("nabla trace = r - (n-2)/r", nab[0].trace() == R - (n - 2) / R)
    if n == 3:
        report.add("traces coincide", t_tri == t_nab)
    else:
        report.add("traces differ", tri[0].trace() != nab[0].trace())
    if n == 5:
        P, Q = fact1_matrices()
        report.extend(hecke_relations(P, title=""))
        report.extend(hecke_relations(Q, title=""))
        tp = [M.trace() for M in P]
        tq = [M.trace() for M in Q]
        report.info["P traces"] = ", ".join(str(x) for x in tp)
        report.info["Q traces"] = ", ".join(str(x) for x in tq)
        report.add("P and Q trace profiles differ", tp != tq)
    return report


def k5_trace_profile(r_value=2) -> Report:
    """Traces of the ``g_i`` on ``K(5)`` at ``l = r`` against the two degree-5 families."""
    r = Fraction(r_value)
    rep = LKRep(5, ParamSpec.numeric(r, r))
    K = compute_K(rep)
    report = Report(f"K(5) at l = r = {r}")
    report.info["dim K(5)"] = K.dim
    traces = [K.restrict(rep.G(k)).trace() for k in range(1, 5)] if K.dim else []
    report.info["traces"] = ", ".join(str(t) for t in traces)
    P, Q = fact1_matrices(r)
    tp, tq = P[0].trace(), Q[0].trace()
    report.add("dim K(5) = 5", K.dim == 5)
    report.add("traces match the P family", bool(traces) and all(t == tp for t in traces))
    report.add("traces differ from the Q family", bool(traces) and all(t != tq for t in traces))
    return report
