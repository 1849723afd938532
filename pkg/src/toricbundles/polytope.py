"""Delzant polytopes of projective-bundle type.

A bundle tuple (r, s, a, kappa) with a non-negative sorted and
kappa > sigma_1(a) - s describes the polytope in R^(r+s) cut out by

    x_i >= -1                    (1 <= i <= r)
    x_1 + ... + x_r <= 1
    x_{r+j} >= -1                (1 <= j <= s)
    x_{r+1} + ... + x_{r+s} <= kappa + a_1 x_1 + ... + a_r x_r

whose first r coordinates run over a standard simplex (edge length r + 1)
and whose fibers are simplices of linearly varying size.  This module
builds such polytopes, enumerates their vertices exactly, checks the
Delzant conditions, measures volumes and fiber sizes, and recognizes the
normal form inside an arbitrary H-description.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd

from . import _linalg as la
from .errors import InvalidKappa, LengthMismatch, NotABundle, NotSimple, Unbounded
from .symfun import exponent_vector

Rat = Fraction


@dataclass(frozen=True)
class BundleTuple:
    """Normalized bundle data (r, s, a, kappa); validates on construction."""

    r: int
    s: int
    a: tuple[int, ...]
    kappa: Fraction

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError(f"need r >= 1 and s >= 1, got r={self.r}, s={self.s}")
        object.__setattr__(self, "a", exponent_vector(self.a))
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        if len(self.a) != self.r:
            raise LengthMismatch(f"a has length {len(self.a)}, expected r = {self.r}")
        if self.kappa <= self.k_min:
            raise InvalidKappa(
                f"kappa = {self.kappa} must exceed sigma_1(a) - s = {self.k_min}; "
                "at or below it the fiber over the corner base vertex collapses"
            )

    @property
    def k_min(self) -> int:
        return sum(self.a) - self.s

    @property
    def dim(self) -> int:
        return self.r + self.s


@dataclass(frozen=True)
class Facet:
    """One inequality <x, conormal> <= constant with a primitive integer conormal."""

    conormal: tuple[int, ...]
    constant: Fraction

    def __post_init__(self):
        object.__setattr__(self, "conormal", tuple(int(x) for x in self.conormal))
        object.__setattr__(self, "constant", Fraction(self.constant))
        if not any(self.conormal):
            raise ValueError("a facet conormal must be nonzero")


@dataclass(frozen=True)
class DelzantPolytope:
    """H-description container; the Delzant conditions are checked by
    is_delzant, not at construction, so defective inputs can be diagnosed."""

    dim: int
    facets: tuple[Facet, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        object.__setattr__(self, "facets", tuple(self.facets))
        for f in self.facets:
            if len(f.conormal) != self.dim:
                raise LengthMismatch(
                    f"conormal {f.conormal} has length {len(f.conormal)}, expected {self.dim}"
                )

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "facets": [
                {"conormal": list(f.conormal), "constant": str(f.constant)}
                for f in self.facets
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "DelzantPolytope":
        if not isinstance(obj, dict):
            raise ValueError("polytope JSON must be an object")
        dim = obj.get("dim")
        if not isinstance(dim, int):
            raise ValueError("polytope JSON needs an integer 'dim'")
        raw = obj.get("facets")
        if not isinstance(raw, list) or not raw:
            raise ValueError("polytope JSON needs a non-empty 'facets' list")
        facets = []
        for item in raw:
            conormal = item.get("conormal")
            if not isinstance(conormal, list) or not all(
                isinstance(x, int) for x in conormal
            ):
                raise ValueError(f"facet conormal must be a list of integers: {item!r}")
            const = item.get("constant")
            if not isinstance(const, (str, int)):
                raise ValueError(f"facet constant must be 'p/q' or an integer: {item!r}")
            facets.append(Facet(tuple(conormal), Fraction(const)))
        return cls(dim, tuple(facets))


@dataclass(frozen=True)
class Vertex:
    """A vertex point with the set of facet indices active at it (0-based)."""

    point: tuple[Fraction, ...]
    active: frozenset[int]


@dataclass(frozen=True)
class DelzantReport:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RecognizedForm:
    """One bundle presentation of a polytope.

    The map x -> scale * (matrix @ x) + translation sends the input polytope
    exactly onto build(bundle); matrix is unimodular and scale is the positive
    rational that makes the base simplex standard (1 whenever the input is
    already normalized up to a lattice-affine map).
    """

    bundle: BundleTuple
    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[Fraction, ...]
    scale: Fraction


def build(t: BundleTuple) -> DelzantPolytope:
    """The normal-form polytope of a bundle tuple (facets in definition order)."""
    r, s = t.r, t.s
    n = r + s
    facets = []
    for i in range(r):
        facets.append(Facet(tuple(-1 if j == i else 0 for j in range(n)), Fraction(1)))
    facets.append(Facet((1,) * r + (0,) * s, Fraction(1)))
    for j in range(s):
        facets.append(
            Facet(tuple(-1 if k == r + j else 0 for k in range(n)), Fraction(1))
        )
    facets.append(Facet(tuple(-x for x in t.a) + (1,) * s, t.kappa))
    return DelzantPolytope(n, tuple(facets))


def vertices(P: DelzantPolytope) -> list[Vertex]:
    """All vertices of a bounded polytope, sorted by coordinates.

    Every invertible n-subset of facets is solved exactly and kept when the
    solution satisfies the remaining inequalities.  Raises Unbounded when the
    conormals do not span or a recession direction exists, and NotSimple when
    some vertex lies on more than n facets.
    """
    n = P.dim
    A = [f.conormal for f in P.facets]
    b = [f.constant for f in P.facets]
    m = len(A)
    if m < n:
        raise Unbounded("fewer facets than the dimension; the polyhedron cannot be bounded")
    spans = False
    points: dict[tuple, None] = {}
    for idx in combinations(range(m), n):
        sol = la.solve_cramer([A[i] for i in idx], [b[i] for i in idx])
        if sol is None:
            continue
        spans = True
        if all(la.dot(A[j], sol) <= b[j] for j in range(m)):
            points[sol] = None
    if not spans:
        raise Unbounded("facet conormals do not span the ambient space")
    if not points:
        return []
    for idx in combinations(range(m), n - 1):
        ray = la.kernel_vector_int([A[i] for i in idx], n)
        if ray is None:
            continue
        for d in (ray, tuple(-x for x in ray)):
            if all(la.dot(A[j], d) <= 0 for j in range(m)):
                raise Unbounded(f"recession direction {d}")
    out = []
    for p in sorted(points):
        act = frozenset(j for j in range(m) if la.dot(A[j], p) == b[j])
        if len(act) > n:
            raise NotSimple(f"vertex {p} lies on {len(act)} facets (> dim = {n})")
        out.append(Vertex(p, act))
    return out


def _delzant_reason(P: DelzantPolytope, verts: list[Vertex]) -> str:
    """Empty string when P (with precomputed vertices) is Delzant, else why not."""
    for i, f in enumerate(P.facets):
        g = gcd(*(abs(x) for x in f.conormal))
        if g != 1:
            return f"conormal {f.conormal} of facet {i} is not primitive (gcd {g})"
    if not verts:
        return "the polytope is empty"
    for v in verts:
        rows = [P.facets[i].conormal for i in sorted(v.active)]
        d = la.det_int(rows)
        if d not in (1, -1):
            return f"conormals at vertex {v.point} have determinant {d}"
    return ""


def is_delzant(P: DelzantPolytope) -> DelzantReport:
    """Check the Delzant conditions: simple, primitive conormals, and at every
    vertex the active conormals form a lattice basis (determinant +-1)."""
    try:
        verts = vertices(P)
    except NotSimple as exc:
        return DelzantReport(False, f"not simple: {exc}")
    reason = _delzant_reason(P, verts)
    return DelzantReport(True) if not reason else DelzantReport(False, reason)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def exact_volume(t: BundleTuple) -> Fraction:
    """Exact Euclidean volume of build(t) by fiber integration.

    Integrates the fiber volume (1/s!) (kappa + s + sum a_i x_i)^s over the
    base simplex: after the affine map onto the unit simplex the integrand is
    expanded multinomially and each monomial uses
    int_{unit simplex} y^alpha dy = prod(alpha_i!) / (r + |alpha|)!.
    """
    r, s = t.r, t.s
    c0 = t.kappa + s - sum(t.a)
    w = [(r + 1) * ai for ai in t.a]
    total = Fraction(0)
    for alpha in _compositions(s, r + 1):
        term = c0 ** alpha[0] / Fraction(factorial(alpha[0]))
        for wi, e in zip(w, alpha[1:]):
            if e:
                term *= wi**e
        term /= factorial(r + s - alpha[0])
        total += term
    return (r + 1) ** r * total


def nominal_volume(r: int, s: int, kappa) -> Fraction:
    """The closed product formula (1/r!)(1/s!)(r+1)^r (kappa+s)^s.

    This treats the fiber size as constant at its corner value; it equals
    exact_volume whenever s = 1 or a = 0 and undercounts otherwise (the
    integrand is convex in the base variables), so both are reported and
    neither is ever used to recover kappa.
    """
    return Fraction((r + 1) ** r, factorial(r) * factorial(s)) * (Fraction(kappa) + s) ** s


def fiber_fingerprint(t: BundleTuple) -> list[Fraction]:
    """Sorted multiset of the r+1 fiber edge lengths over the base vertices.

    Computed from actual vertex coordinates: vertices are grouped by their
    base coordinates and each group's edge length is the spread of the fiber
    coordinate sums.  Equals sorted({kappa+s-sigma_1(a)} and
    {kappa+s-sigma_1(a) + (r+1) a_i}); together with (r, s) it determines
    (a, kappa).
    """
    P = build(t)
    groups: dict[tuple, list] = {}
    for v in vertices(P):
        groups.setdefault(v.point[: t.r], []).append(sum(v.point[t.r :]))
    assert len(groups) == t.r + 1
    return sorted(max(sums) - min(sums) for sums in groups.values())


def transform_polytope(P: DelzantPolytope, matrix, translation, scale=1) -> DelzantPolytope:
    """Image of P under x -> scale * (matrix @ x) + translation.

    matrix must be integer unimodular and scale a positive rational; facet
    conormals map by the inverse transpose and constants by
    scale * constant + <new conormal, translation>.
    """
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    minv_t = la.transpose(la.inverse_unimodular(matrix))
    facets = []
    for f in P.facets:
        eta = la.mat_vec(minv_t, f.conormal)
        facets.append(Facet(eta, scale * f.constant + la.dot(eta, translation)))
    return DelzantPolytope(P.dim, tuple(facets))


def _facet_key(P: DelzantPolytope):
    return sorted((f.conormal, f.constant) for f in P.facets)


def _corner_form(P, conormals, constants, base_active, fiber_active, far_facet, kappa_facet, r, s):
    """Try to normalize P from one corner vertex of one facet bipartition.

    base_active / fiber_active are the corner's active facets in each group;
    far_facet / kappa_facet are the two facets the corner misses.  Returns a
    RecognizedForm or None.
    """
    n = r + s

    def attempt(order):
        cols = [conormals[i] for i in order] + [conormals[i] for i in fiber_active]
        H = tuple(tuple(cols[t][k] for t in range(n)) for k in range(n))
        if la.det_int(H) not in (1, -1):
            return None
        uinv_t = tuple(tuple(-x for x in row) for row in la.inverse_unimodular(H))
        eta_far = la.mat_vec(uinv_t, conormals[far_facet])
        if eta_far != (1,) * r + (0,) * s:
            return None
        eta_kap = la.mat_vec(uinv_t, conormals[kappa_facet])
        if eta_kap[r:] != (1,) * s:
            return None
        avals = tuple(-x for x in eta_kap[:r])
        if any(x < 0 for x in avals):
            return None
        return H, eta_kap, avals

    got = attempt(base_active)
    if got is None:
        return None
    order = tuple(f for _, f in sorted(zip(got[2], base_active)))
    got = attempt(order)
    if got is None:
        return None
    H, eta_kap, avals = got

    denom = constants[far_facet] + sum(constants[i] for i in order)
    if denom <= 0:
        return None
    lam = Fraction(r + 1) / denom
    w = tuple(lam * constants[i] - 1 for i in order) + tuple(
        lam * constants[i] - 1 for i in fiber_active
    )
    kappa = lam * constants[kappa_facet] + la.dot(eta_kap, w)
    try:
        t = BundleTuple(r, s, avals, kappa)
    except InvalidKappa:
        return None
    # U^{-T} = -H^{-1}, so U = -H^T.
    U = tuple(tuple(-H[j][i] for j in range(n)) for i in range(n))
    if _facet_key(transform_polytope(P, U, w, lam)) != _facet_key(build(t)):
        return None
    return RecognizedForm(t, U, w, lam)


def recognize(P: DelzantPolytope) -> list[RecognizedForm]:
    """All bundle presentations of a Delzant polytope, sorted by (r, s).

    The facets must number dim + 2 and admit a bipartition into groups of
    sizes r+1 and s+1 such that every vertex misses exactly one facet of each
    group (the combinatorics of a simplex product).  For each such assignment
    the corner conormals are mapped onto the normal-form frame, the scale is
    pinned by making the base simplex standard, and the candidate is kept only
    if the transformed facet set equals the normal form exactly.  Per (r, s) a
    presentation realized without rescaling wins over a rescaled one; a
    product polytope (a = 0) is reported under both fibrations.
    """
    n = P.dim
    if len(P.facets) != n + 2:
        raise NotABundle(f"{len(P.facets)} facets, expected dim + 2 = {n + 2}")
    try:
        verts = vertices(P)
    except NotSimple as exc:
        raise NotABundle(f"not a Delzant polytope: not simple: {exc}")
    reason = _delzant_reason(P, verts)
    if reason:
        raise NotABundle(f"not a Delzant polytope: {reason}")
    m = n + 2
    conormals = [f.conormal for f in P.facets]
    constants = [f.constant for f in P.facets]
    missed = []
    for v in verts:
        pair = tuple(sorted(set(range(m)) - v.active))
        assert len(pair) == 2
        missed.append(pair)

    found: dict[tuple[int, int], RecognizedForm] = {}
    for p in range(2, n + 1):
        r = p - 1
        s = n - r
        if len(verts) != (r + 1) * (s + 1):
            continue
        for base_group in combinations(range(m), p):
            bset = frozenset(base_group)
            pairs = set()
            ok = True
            for pr in missed:
                if (pr[0] in bset) + (pr[1] in bset) != 1:
                    ok = False
                    break
                pairs.add(pr)
            if not ok or len(pairs) != len(verts):
                continue
            for v, pr in zip(verts, missed):
                far = pr[0] if pr[0] in bset else pr[1]
                kap = pr[1] if far == pr[0] else pr[0]
                base_active = tuple(i for i in sorted(v.active) if i in bset)
                fiber_active = tuple(i for i in sorted(v.active) if i not in bset)
                form = _corner_form(
                    P, conormals, constants, base_active, fiber_active, far, kap, r, s
                )
                if form is None:
                    continue
                key = (r, s)
                if key not in found or (found[key].scale != 1 and form.scale == 1):
                    found[key] = form
                break
    if not found:
        raise NotABundle("no facet bipartition matches the bundle normal form")
    return [found[k] for k in sorted(found)]
