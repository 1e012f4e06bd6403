"""Rational (genus-0) function-field machinery over GF(q^2).

Divisors live on the projective line: finite places P_beta (one per field
element) plus the pole place O of 1/x.  Riemann-Roch collapses to a closed
form (canonical divisor -2*O), which drives explicit bases of L(G),
evaluation codes, and the residues of the differential dx/h(x) used to
scale two-point codes so that their Hermitian hulls become MDS codes of
controlled dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import polys, quantum
from .gf import FieldContext, quadratic_field
from .linalg_codes import (DEFAULT_BUDGET, LinearCode, conjugate,
                           gram_matrix, mat_mul, matrix_rank, rref)
from .report import (STATUS_FAIL, STATUS_PASS, STATUS_SKIPPED,
                     STATUS_STRUCTURAL, ConstructionReport)


@dataclass(frozen=True, order=True)
class Place:
    """A degree-1 place: Finite(beta) or the pole place of 1/x."""

    at_infinity: bool
    beta: int = 0

    def __repr__(self):
        return "O" if self.at_infinity else f"P({self.beta})"


O = Place(True)


def finite(beta: int) -> Place:
    return Place(False, int(beta))


class Divisor:
    """Sparse integer-valued map on places; immutable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[dict[Place, int]] = None):
        c = {p: int(v) for p, v in (coeffs or {}).items() if v != 0}
        object.__setattr__(self, "_c", c)

    @classmethod
    def one_point(cls, k: int) -> "Divisor":
        return cls({O: k})

    @classmethod
    def of(cls, *pairs: tuple[Place, int]) -> "Divisor":
        d: dict[Place, int] = {}
        for p, v in pairs:
            d[p] = d.get(p, 0) + v
        return cls(d)

    def coeff(self, p: Place) -> int:
        return self._c.get(p, 0)

    def support(self) -> set[Place]:
        return set(self._c)

    def degree(self) -> int:
        return sum(self._c.values())

    def _merge(self, other: "Divisor", op) -> "Divisor":
        keys = set(self._c) | set(other._c)
        return Divisor({p: op(self.coeff(p), other.coeff(p)) for p in keys})

    def __add__(self, other):
        return self._merge(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._merge(other, lambda a, b: a - b)

    def wedge(self, other):
        """Pointwise minimum."""
        return self._merge(other, min)

    def vee(self, other):
        """Pointwise maximum."""
        return self._merge(other, max)

    def __ge__(self, other):
        return all(self.coeff(p) >= other.coeff(p)
                   for p in self.support() | other.support())

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*{p}" for p, v in sorted(
            self._c.items(), key=lambda kv: (not kv[0].at_infinity, kv[0].beta)))


@dataclass(frozen=True)
class RationalFunction:
    """num/den over a FieldContext, den monic, gcd divided out."""

    field: FieldContext
    num: tuple
    den: tuple

    @classmethod
    def make(cls, F: FieldContext, num, den=(1,)) -> "RationalFunction":
        num, den = polys.trim(num), polys.trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = polys.gcd(F, num, den)
        if polys.degree(g) > 0:
            num = polys.divmod_(F, num, g)[0]
            den = polys.divmod_(F, den, g)[0]
        if den and den[-1] != 1:
            c = F.inv(den[-1])
            num = polys.scale(F, num, c)
            den = polys.scale(F, den, c)
        return cls(F, num, den)

    def evaluate(self, x: int) -> int:
        d = polys.evaluate(self.field, self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.field.div(polys.evaluate(self.field, self.num, x), d)

    def valuation(self, place: Place) -> int:
        if not self.num:
            raise ValueError("the zero function has no valuations")
        F = self.field
        if place.at_infinity:
            return polys.degree(self.den) - polys.degree(self.num)
        return (polys.root_multiplicity(F, self.num, place.beta)
                - polys.root_multiplicity(F, self.den, place.beta))

    def is_zero(self) -> bool:
        return not self.num


def rr_dim(G: Divisor) -> int:
    """dim L(G) on the genus-0 line: 0 for negative degree, else deg + 1."""
    d = G.degree()
    return 0 if d < 0 else d + 1


def lbasis(F: FieldContext, G: Divisor) -> list[RationalFunction]:
    """A basis of L(G), verified element-by-element against the valuations.

    With no negative finite multiplicities the basis has the familiar
    shape {1, x, ..., x^(G(O))} plus pole terms 1/(x-beta)^j; otherwise a
    quotient basis {Z x^t / N} is used.
    """
    if G.degree() < 0:
        return []
    fin = [(p, G.coeff(p)) for p in sorted(G.support() - {O})]
    nO = G.coeff(O)
    out: list[RationalFunction] = []
    if nO >= 0 and all(v >= 0 for _, v in fin):
        for t in range(nO + 1):
            mono = tuple([0] * t + [1])
            out.append(RationalFunction.make(F, mono))
        for p, v in fin:
            lin = (F.neg(p.beta), 1)
            den: tuple = (1,)
            for j in range(1, v + 1):
                den = polys.mul(F, den, lin)
                out.append(RationalFunction.make(F, (1,), den))
    else:
        N: tuple = (1,)
        Z: tuple = (1,)
        for p, v in fin:
            lin = (F.neg(p.beta), 1)
            for _ in range(abs(v)):
                if v > 0:
                    N = polys.mul(F, N, lin)
                else:
                    Z = polys.mul(F, Z, lin)
        for t in range(G.degree() + 1):
            num = polys.mul(F, Z, tuple([0] * t + [1]))
            out.append(RationalFunction.make(F, num, N))
    assert len(out) == rr_dim(G)
    for f in out:
        places = set(G.support()) | {O}
        places |= {finite(b) for b in range(F.order)
                   if polys.evaluate(F, f.den, b) == 0}
        for p in places:
            assert f.valuation(p) + G.coeff(p) >= 0, (f, p)
    return out


@dataclass
class EvalCode:
    """An evaluation code together with its natural (unreduced) rows."""

    field: FieldContext
    points: tuple[int, ...]
    divisor: Divisor
    rows: np.ndarray
    code: LinearCode


def evaluation_code(F: FieldContext, points: Sequence[int], G: Divisor) -> EvalCode:
    pts = tuple(int(u) for u in points)
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be distinct")
    if any(finite(u) in G.support() for u in pts):
        raise ValueError("divisor support meets the evaluation set")
    basis = lbasis(F, G)
    rows = np.zeros((len(basis), len(pts)), dtype=np.int32)
    for i, f in enumerate(basis):
        for j, u in enumerate(pts):
            rows[i, j] = f.evaluate(u)
    return EvalCode(F, pts, G, rows, LinearCode.from_rows(F, rows, n=len(pts)))


# ----------------------------------------------------------------------
# residues of dx/h
# ----------------------------------------------------------------------

@dataclass
class DifferentialData:
    """Residues of (a constant multiple of) dx/h on the evaluation set.

    ``residues`` are the raw values 1/h'(u_i); when they do not all lie in
    GF(q)^* but a common constant fixes that, ``scale`` holds the canonical
    constant and ``witnesses`` solve a_i^(q+1) = scale * residue_i.
    """

    field: FieldContext
    points: tuple[int, ...]
    h: tuple
    residues: tuple[int, ...]
    scale: int
    scaled_residues: tuple[int, ...]
    witnesses: tuple[int, ...]  # empty when the residues are not norms


def residues(F: FieldContext, points: Sequence[int],
             normalize: bool = True) -> DifferentialData:
    """Residues 1/h'(u_i) of dx/h at the simple zeros of h = prod (x - u).

    When the raw residues are not all in GF(q)^* but share GF(q) ratios, a
    canonical constant rescale of the differential fixes that (smallest
    discrete log among the valid constants); with ``normalize=False`` the
    raw residues are returned with no norm witnesses.
    """
    pts = tuple(int(u) for u in points)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    if len(set(pts)) != len(pts):
        raise ValueError("repeated evaluation point (h' would vanish)")
    h = polys.from_roots(F, pts)
    hp = polys.derivative(F, h)
    rs = []
    for u in pts:
        v = polys.evaluate(F, hp, u)
        assert v != 0
        rs.append(F.inv(v))
    total = 0
    for r in rs:
        total = F.add(total, r)
    assert total == 0, "residue theorem violated"
    scale = 1
    if not all(F.is_norm(r) for r in rs):
        r0 = rs[0]
        fixable = all(F.in_subfield(F.div(r, r0)) for r in rs)
        if not (normalize and fixable):
            return DifferentialData(F, pts, h, tuple(rs), 1, tuple(rs), ())
        inv0 = F.inv(r0)
        cands = [F.mul(inv0, F.from_subfield(s))
                 for s in range(1, F.subfield.order)]
        scale = min(cands, key=F.log_of)
    scaled = tuple(F.mul(scale, r) for r in rs)
    wits = tuple(F.solve_norm(r) for r in scaled)
    return DifferentialData(F, pts, h, tuple(rs), scale, scaled, wits)


# ----------------------------------------------------------------------
# evaluation-set families
# ----------------------------------------------------------------------

def evaluation_set(family: str, q: int, s: Optional[int] = None,
                   t: Optional[int] = None, n0: Optional[int] = None) -> tuple[int, ...]:
    """The evaluation sets behind the three two-point families.

    COR1: the (s-1)-th roots of unity plus 0 (needs (s-1) | q^2-1, s != q^2).
    COR2: t additive cosets c*alpha + GF(q), c over the first t subfield
          elements (needs 1 <= t < q).
    COR3: t+1 multiplicative cosets of the n0-th roots of unity whose
          representative powers land in GF(q)^*, plus 0.
    Every returned set is verified: distinct points whose dx/h residues are
    (up to the canonical constant) in GF(q)^*.
    """
    F = quadratic_field(q)
    N = q * q - 1
    if family == "COR1":
        if s is None or s < 2 or s == q * q or N % (s - 1) != 0:
            raise ValueError("COR1 requires s >= 2, (s-1) | q^2-1, s != q^2")
        step = N // (s - 1)
        pts = [F.alpha_pow(step * i) for i in range(s - 1)] + [0]
    elif family == "COR2":
        if t is None or not 1 <= t < q:
            raise ValueError("COR2 requires 1 <= t < q")
        subs = [F.from_subfield(c) for c in range(t)]
        pts = [F.add(F.mul(c, F.alpha), F.from_subfield(v))
               for c in subs for v in range(q)]
    elif family == "COR3":
        if n0 is None or N % n0 != 0:
            raise ValueError("COR3 requires n0 | q^2-1")
        n2 = n0 // math.gcd(n0, q + 1)
        tmax = (q - 1) // n2 - 2
        if t is None or not 1 <= t <= tmax:
            raise ValueError(f"COR3 requires 1 <= t <= (q-1)/n2 - 2 = {tmax}")
        e = (q + 1) // math.gcd(n0, q + 1)
        root_step = N // n0
        pts = []
        for j in range(t + 1):
            rep = F.alpha_pow(j * e)
            pts.extend(F.mul(rep, F.alpha_pow(root_step * i)) for i in range(n0))
        pts.append(0)
    else:
        raise ValueError(f"unknown family {family!r}")
    if len(set(pts)) != len(pts):
        raise ValueError("internal: generated points collide")
    if not residues(F, pts).witnesses:
        raise ValueError("residue condition failed on the generated set")
    return tuple(pts)


def family_parameter_grid(family: str, q: int) -> list[dict]:
    """In-range parameter dicts {.., n, k} for the two-point families."""
    out = []
    if family == "COR1":
        for s in range(2, q * q):
            if (q * q - 1) % (s - 1) == 0 and s != q * q:
                for k in range((s - 2) // (q + 1) + 1):
                    out.append({"s": s, "n": s, "k": k})
    elif family == "COR2":
        for t in range(1, q):
            for k in range((t * q - 2) // (q + 1) + 1):
                out.append({"t": t, "n": t * q, "k": k})
    elif family == "COR3":
        for n0 in range(1, q * q):
            if (q * q - 1) % n0 != 0:
                continue
            n2 = n0 // math.gcd(n0, q + 1)
            for t in range(1, (q - 1) // n2 - 1):
                n = (t + 1) * n0 + 1
                for k in range((n - 2) // (q + 1) + 1):
                    out.append({"n0": n0, "t": t, "n": n, "k": k})
    else:
        raise ValueError(f"unknown family {family!r}")
    return out


def default_extra_point(F: FieldContext, points: Sequence[int]) -> int:
    used = set(int(u) for u in points)
    for v in range(F.order):
        if v not in used:
            return v
    raise ValueError("no rational point left for the extra place")


# ----------------------------------------------------------------------
# the two-point construction
# ----------------------------------------------------------------------

@dataclass
class TwoPointResult:
    field: FieldContext
    points: tuple[int, ...]
    k: int
    p: int
    diff: DifferentialData
    code: LinearCode
    scaled_rows: np.ndarray       # k+2 natural generator rows, scaled
    one_point_rows: np.ndarray    # the k+1 rows spanning the self-orthogonal part
    branch: int                   # 1: self-orthogonal, 2: hull of dimension k
    hull: LinearCode
    report: ConstructionReport


def two_point_code(F: FieldContext, points: Sequence[int], k: int,
                   p: Optional[int] = None,
                   distance_budget: int = DEFAULT_BUDGET,
                   hull_distance_budget: int = 10 ** 6) -> TwoPointResult:
    """Scaled evaluation code on G = kO + P with an MDS Hermitian hull.

    The scaling solves a_i^(q+1) = Res_i(dx/h) (after the canonical
    constant rescale when needed).  The two branches are detected, never
    assumed: either the code is Hermitian self-orthogonal, or its hull has
    dimension k and is checked to be MDS within budget.
    """
    if F.subfield is None:
        raise ValueError("two-point codes need a quadratic extension")
    q = F.q
    pts = tuple(int(u) for u in points)
    n = len(pts)
    if not 0 <= k <= (n - 2) // (q + 1):
        raise ValueError(f"need 0 <= k <= (n-2)/(q+1) = {(n - 2) // (q + 1)}")
    diff = residues(F, pts)
    if not diff.witnesses:
        raise ValueError("residues are outside GF(q)^* even after constant "
                         "rescaling; construction hypotheses violated")
    if p is None:
        p = default_extra_point(F, pts)
    if p in pts:
        raise ValueError("the extra place must avoid the evaluation set")
    a = np.array(diff.witnesses, dtype=np.int32)

    G2 = Divisor.of((O, k), (finite(p), 1))
    ev = evaluation_code(F, pts, G2)
    scaled = F.mul_arr(ev.rows, a[None, :])
    code = LinearCode.from_rows(F, scaled, n=n)

    rep = ConstructionReport(
        construction={"module": "ag", "family": "two_point",
                      "parameters": {"q": q, "n": n, "k": k,
                                     "p": F.log_of(p) if p else -1}},
        field=F.describe())
    rep.check_eq("code_length", n, code.n)
    rep.check_eq("code_dimension", k + 2, code.k)

    # the one-point part a . C_L(D, kO) should be Hermitian self-orthogonal
    one_rows = scaled[:k + 1]
    self_orth_part = not mat_mul(F, one_rows, conjugate(F, one_rows).T).any()
    rep.check("one_point_self_orthogonal",
              STATUS_PASS if self_orth_part else STATUS_FAIL,
              expected=True, measured=self_orth_part)

    # branch test: is a . C_L(D, P) inside the Hermitian dual of the code?
    evP = evaluation_code(F, pts, Divisor.of((finite(p), 1)))
    rowsP = F.mul_arr(evP.rows, a[None, :])
    in_dual = not mat_mul(F, code.gen, conjugate(F, rowsP).T).any()
    branch = 1 if in_dual else 2

    hull = code.hermitian_hull()
    gram_dim = code.k - matrix_rank(F, gram_matrix(F, scaled))
    rep.check_eq("hull_dim_gram_vs_intersection", hull.k, gram_dim)
    if branch == 1:
        rep.check_eq("self_orthogonal_hull", code.k, hull.k,
                     note="branch 1: the code is Hermitian self-orthogonal")
    else:
        ok = hull.k == k
        rep.check("hull_dim", STATUS_PASS if ok else STATUS_FAIL,
                  expected=k, measured=hull.k,
                  note="branch 2" + ("" if ok else
                       "; one below the nominal k" if hull.k == k - 1
                       else "; matches neither k nor k-1"))

    d_kind = "bound"
    d_val: Optional[int] = None
    if F.order ** code.k <= distance_budget:
        d_val = code.min_distance(distance_budget)
        rep.check_eq("code_distance", n - k - 1, d_val, note="enumerated")
        d_kind = "enumerated"
    else:
        rep.check("code_distance", STATUS_SKIPPED,
                  note=f"enumeration over budget; certified d >= {n - k - 1}")
    rep.code = {"n": n, "k": code.k, "d": d_val, "d_bound": n - k - 1,
                "d_kind": d_kind}

    mds_status = "n/a"
    if branch == 2 and hull.k > 0:
        if F.order ** hull.k <= hull_distance_budget:
            dh = hull.min_distance(hull_distance_budget)
            okm = rep.check_eq("hull_mds", n - hull.k + 1, dh,
                               note="enumerated hull distance")
            mds_status = "enumerated" if okm else "failed"
        else:
            rep.check("hull_mds", STATUS_SKIPPED, note="hull enumeration over budget")
            mds_status = "unverified"
    rep.hull = {"dim_claimed": k, "dim_measured": hull.k, "branch": branch,
                "mds": mds_status}
    if rep.verdict != "FAIL":
        ing = quantum.mds_ingredient(q, n, code.k, hull.k)
        rep.quantum = quantum.chain_to_json(ing)
    return TwoPointResult(F, pts, k, p, diff, code, scaled, one_rows,
                          branch, hull, rep)


def extended_two_point(F: FieldContext, points: Sequence[int], k: int,
                       p: Optional[int] = None,
                       distance_budget: int = DEFAULT_BUDGET,
                       require_base: bool = True) -> TwoPointResult:
    """Sum-zero extensions of the scaled one- and two-point codes.

    Precondition, verified rather than assumed: the extended scaled
    one-point code must be Hermitian self-orthogonal with parameters
    [n+1, k+1, n-k+1].  The sum-zero pairing forces the appended
    coordinate of a self-orthogonal extension to vanish identically,
    which caps its distance at n-k, so the precondition fails for every
    admissible input; pass ``require_base=False`` to build and measure
    the extended two-point code anyway.
    """
    if F.subfield is None:
        raise ValueError("two-point codes need a quadratic extension")
    q = F.q
    pts = tuple(int(u) for u in points)
    n = len(pts)
    if not 0 <= k <= (n - 2) // (q + 1):
        raise ValueError(f"need 0 <= k <= (n-2)/(q+1) = {(n - 2) // (q + 1)}")
    diff = residues(F, pts)
    if not diff.witnesses:
        raise ValueError("residues are outside GF(q)^* even after constant "
                         "rescaling; construction hypotheses violated")
    if p is None:
        p = default_extra_point(F, pts)
    if p in pts:
        raise ValueError("the extra place must avoid the evaluation set")
    a = np.array(diff.witnesses, dtype=np.int32)

    ev0 = evaluation_code(F, pts, Divisor.one_point(k))
    base = LinearCode.from_rows(F, F.mul_arr(ev0.rows, a[None, :]), n=n)
    ext_base = base.extend_sum_zero()
    problems = []
    if (ext_base.n, ext_base.k) != (n + 1, k + 1):
        problems.append(f"parameters [{ext_base.n}, {ext_base.k}]")
    if not ext_base.is_hermitian_self_orthogonal():
        problems.append("not Hermitian self-orthogonal")
    elif F.order ** ext_base.k <= distance_budget \
            and ext_base.min_distance(distance_budget) != n - k + 1:
        problems.append(f"distance {ext_base.min_distance()} != {n - k + 1}")
    if problems and require_base:
        raise ValueError("base extended code fails its precondition: "
                         + "; ".join(problems))

    G2 = Divisor.of((O, k), (finite(p), 1))
    ev = evaluation_code(F, pts, G2)
    scaled = F.mul_arr(ev.rows, a[None, :])
    code = LinearCode.from_rows(F, scaled, n=n).extend_sum_zero()

    rep = ConstructionReport(
        construction={"module": "ag", "family": "extended_two_point",
                      "parameters": {"q": q, "n": n + 1, "k": k,
                                     "p": F.log_of(p) if p else -1}},
        field=F.describe())
    rep.check("base_extension_self_orthogonal",
              STATUS_PASS if not problems else STATUS_FAIL,
              expected=True, measured=not problems, note="; ".join(problems))
    rep.check_eq("code_length", n + 1, code.n)
    rep.check_eq("code_dimension", k + 2, code.k)

    evP = evaluation_code(F, pts, Divisor.of((finite(p), 1)))
    extP = LinearCode.from_rows(F, F.mul_arr(evP.rows, a[None, :]),
                                n=n).extend_sum_zero()
    in_dual = not mat_mul(F, code.gen, conjugate(F, extP.gen).T).any()
    branch = 1 if in_dual else 2

    hull = code.hermitian_hull()
    if branch == 1:
        rep.check_eq("self_orthogonal_hull", code.k, hull.k,
                     note="branch 1: the extension is Hermitian self-orthogonal")
    else:
        rep.check_eq("hull_dim", k, hull.k, note="branch 2")
    d_val = None
    d_kind = "bound"
    if F.order ** code.k <= distance_budget:
        d_val = code.min_distance(distance_budget)
        rep.check_eq("code_distance", n - k, d_val, note="enumerated")
        d_kind = "enumerated"
    rep.code = {"n": n + 1, "k": code.k, "d": d_val, "d_bound": n - k,
                "d_kind": d_kind}
    rep.hull = {"dim_claimed": k, "dim_measured": hull.k, "branch": branch,
                "mds": "n/a"}
    return TwoPointResult(F, pts, k, p, diff, code, scaled,
                          code.gen[:k + 1], branch, hull, rep)


# ----------------------------------------------------------------------
# arbitrary hull dimension by pivot scaling
# ----------------------------------------------------------------------

def default_scaling_element(F: FieldContext) -> int:
    """Canonical pivot-scaling element: norm outside {1, -1}.

    Norm 1 leaves the hull unchanged and norm -1 is excluded by the
    scaling argument, so both are rejected.  A subfield element is
    preferred when one qualifies (none does for q <= 5), else the
    smallest-log element of GF(q^2) with an admissible norm.
    """
    neg1 = F.neg(1)
    q = F.q
    for e in range(1, q - 1):
        v = F.alpha_pow(e * (q + 1))
        if F.pow(v, q + 1) not in (1, neg1):
            return v
    for e in range(1, F.order - 1):
        v = F.alpha_pow(e)
        if F.pow(v, q + 1) not in (1, neg1):
            return v
    raise ValueError("no admissible scaling element: every norm is +-1 "
                     f"over GF({q})")


def scale_for_hull(result: TwoPointResult, ell: int,
                   alpha: Optional[int] = None) -> tuple[LinearCode, int]:
    """Monomially rescale ell coordinates of a branch-2 two-point code;
    returns the new code and its measured hull dimension.

    The scaled coordinates are the last ell pivot columns of the
    self-orthogonal part, and the scalar's norm must avoid {1, -1}.
    Coordinate scaling preserves the [n, k+2, n-k-1] parameters outright;
    sweeping ell from 0 to k walks the hull dimension from k down to 0.
    """
    F = result.field
    k = result.k
    if not 0 <= ell <= k:
        raise ValueError(f"need 0 <= ell <= {k}")
    if alpha is None:
        alpha = default_scaling_element(F)
    if alpha == 0 or F.pow(alpha, F.q + 1) == F.neg(1):
        raise ValueError("scaling element must be nonzero with norm != -1")
    if ell > 0 and F.pow(alpha, F.q + 1) == 1:
        raise ValueError("norm-1 scaling cannot change the hull")
    T, rank, pivots = rref(F, result.one_point_rows)
    if rank != k + 1:
        raise ValueError("self-orthogonal part has unexpected rank")
    a = np.ones(result.code.n, dtype=np.int32)
    for i in range(rank - ell, rank):
        a[pivots[i]] = alpha
    code = result.code.monomial_scale(a)
    return code, code.hull_dim_via_gram()


def scale_sweep(result: TwoPointResult, alpha: Optional[int] = None) -> dict[int, int]:
    """Measured hull dimension for every ell in [0, k]."""
    return {ell: scale_for_hull(result, ell, alpha)[1]
            for ell in range(result.k + 1)}


# ----------------------------------------------------------------------
# recursive evaluation-set growth
# ----------------------------------------------------------------------

@dataclass
class GrowthStep:
    pair: tuple[int, int]
    conjugate: bool
    points: tuple[int, ...]


@dataclass
class GrowthResult:
    start: tuple[int, ...]
    steps: list[GrowthStep]
    status: str  # "ok" | "exhausted"

    @property
    def final(self) -> tuple[int, ...]:
        return self.steps[-1].points if self.steps else self.start


def _derivative_norm_condition(F: FieldContext, pts: Sequence[int]) -> bool:
    h = polys.from_roots(F, pts)
    hp = polys.derivative(F, h)
    return all(F.is_norm(polys.evaluate(F, hp, u)) for u in pts)


def extend_evaluation_set(F: FieldContext, points: Sequence[int],
                          max_steps: int = 1) -> GrowthResult:
    """Grow the evaluation set two points at a time, keeping every
    derivative value of the defining polynomial inside GF(q)^*.

    Candidate pairs are scanned deterministically: Frobenius-conjugate
    pairs (beta, beta^q) by increasing log first, then all remaining pairs
    in lexicographic log order.  Exhaustion is a terminal status, not an
    error, and the norm condition is re-verified from scratch each step.
    """
    if F.subfield is None:
        raise ValueError("growth needs a quadratic extension")
    pts = tuple(int(u) for u in points)
    if not _derivative_norm_condition(F, pts):
        raise ValueError("starting set violates the derivative-norm condition")
    steps: list[GrowthStep] = []
    status = "ok"
    for _ in range(max_steps):
        found = None
        f = polys.from_roots(F, pts)
        used = set(pts)
        nonmembers = [F.alpha_pow(e) for e in range(F.order - 1)
                      if F.alpha_pow(e) not in used]
        if 0 not in used:
            nonmembers.append(0)

        def pair_ok(b1: int, b2: int) -> bool:
            d12 = F.sub(b1, b2)
            if not (F.is_norm(F.mul(polys.evaluate(F, f, b1), d12))
                    and F.is_norm(F.mul(polys.evaluate(F, f, b2), F.neg(d12)))):
                return False
            return all(F.is_norm(F.mul(F.sub(u, b1), F.sub(u, b2)))
                       for u in pts)

        for b1 in nonmembers:
            b2 = F.frobenius_q(b1)
            if b2 == b1 or b2 in used:
                continue
            if pair_ok(b1, b2):
                found = (b1, b2, True)
                break
        if found is None:
            for b1 in nonmembers:
                for b2 in nonmembers:
                    if b2 == b1:
                        continue
                    if pair_ok(b1, b2):
                        found = (b1, b2, False)
                        break
                if found:
                    break
        if found is None:
            status = "exhausted"
            break
        b1, b2, conj = found
        pts = pts + (b1, b2)
        assert _derivative_norm_condition(F, pts), \
            "grown set violates the derivative-norm condition"
        steps.append(GrowthStep((b1, b2), conj, pts))
    return GrowthResult(tuple(int(u) for u in points), steps, status)
