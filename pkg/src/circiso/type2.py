"""The theta transform family: vertex permutations of Z_n parameterized by
(n, m, t), image classification against the source graph, and Type-2 orbits
with their group structure."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .circulant import (
    Circulant,
    NotCirculant,
    detect_permuted,
    realize,
    symmetric_set,
)
from .errors import InvalidParams, ParamMismatch, PreconditionViolation
from .iso_oracle import IsoWitness, make_witness
from .residue import check_modulus, reflexive_reduce, valid_type2_params
from .type1 import is_adams_isomorphic


@dataclass(frozen=True, order=True)
class ThetaMap:
    """Parameters (n, m, t) of the vertex map x -> x + (x mod m)*m*t mod n.

    Valid only when m > 1, m^3 divides n and 0 <= t < n/m; the induced map
    is then always a permutation of Z_n (classes mod m are preserved, and
    the shift inside a class is constant).
    """

    n: int
    m: int
    t: int

    def __post_init__(self):
        check_modulus(self.n)
        if self.m <= 1:
            raise InvalidParams(f"m must be > 1, got {self.m}")
        if self.n % self.m**3 != 0:
            raise InvalidParams(f"m^3 = {self.m ** 3} does not divide n = {self.n}")
        if not 0 <= self.t < self.n // self.m:
            raise InvalidParams(f"t must lie in [0, {self.n // self.m - 1}], got {self.t}")

    def label(self) -> str:
        return f"theta(n={self.n},m={self.m},t={self.t})"


@lru_cache(maxsize=32)
def theta_vertex_map(tm: ThetaMap) -> tuple[int, ...]:
    """Image list of the permutation, indexed by vertex."""
    n, m, mt = tm.n, tm.m, tm.m * tm.t
    img = tuple((x + (x % m) * mt) % n for x in range(n))
    assert len(set(img)) == n, "theta image is not a permutation"
    return img


def theta_offsets(tm: ThetaMap, full) -> tuple[int, ...]:
    """Apply the transform elementwise to a symmetric offset set.

    Offsets divisible by m are fixed; the result is the image graph's
    difference set at vertex 0, sorted, and is symmetric exactly when the
    image is circulant.
    """
    n, m, mt = tm.n, tm.m, tm.m * tm.t
    return tuple(sorted((s + (s % m) * mt) % n for s in full))


@dataclass(frozen=True)
class ThetaClassification:
    """Outcome of applying one theta transform to one circulant graph.

    kind is one of "identity", "type1", "type2", "not_circulant". A
    circulant outcome always carries the image set and a verified witness;
    "type1" also records the least unit, "not_circulant" the first vertex
    where the difference sets disagree.
    """

    map: ThetaMap
    source: Circulant
    kind: str
    image: Optional[Circulant] = None
    unit: Optional[int] = None
    failing_vertex: Optional[int] = None
    witness: Optional[IsoWitness] = None


def _check_classify_preconditions(tm: ThetaMap, g: Circulant):
    if tm.n != g.n:
        raise ParamMismatch(f"transform order {tm.n} != graph order {g.n}")
    if len(g.conn) < 3:
        raise PreconditionViolation("Type-2 classification needs at least 3 offsets")
    v = valid_type2_params(g.n, tm.m, g.conn)
    if not v.divisible_offsets:
        raise PreconditionViolation(f"no offset of {g.label()} is divisible by m={tm.m}")


def classify_theta(tm: ThetaMap, g: Circulant) -> ThetaClassification:
    """Transform the realized edge set of g and classify the image.

    The edge-set route is the ground truth; when it reports a circulant
    image, the elementwise offset shortcut must reduce to exactly the same
    set (hard assertion), and the vertex bijection is verified against the
    realized image before being attached as a witness.
    """
    _check_classify_preconditions(tm, g)
    perm = theta_vertex_map(tm)
    source_edges = realize(g)
    det = detect_permuted(source_edges, perm)
    if isinstance(det, NotCirculant):
        return ThetaClassification(map=tm, source=g, kind="not_circulant", failing_vertex=det.vertex)
    image = det
    shortcut = reflexive_reduce(theta_offsets(tm, symmetric_set(g)), g.n)
    assert shortcut == image.conn, "offset shortcut disagrees with edge transform"
    witness = make_witness(source_edges, realize(image), perm, f"theta(m={tm.m},t={tm.t})")
    assert witness.verified
    if image == g:
        return ThetaClassification(map=tm, source=g, kind="identity", image=image, witness=witness)
    x = is_adams_isomorphic(g, image)
    if x is not None:
        return ThetaClassification(
            map=tm, source=g, kind="type1", image=image, unit=x, witness=witness
        )
    return ThetaClassification(map=tm, source=g, kind="type2", image=image, witness=witness)


@dataclass(frozen=True)
class Type2Orbit:
    """Type-2 set of a graph w.r.t. m: the base plus every Type-2 image.

    outcomes records (t, kind, image) for every t in [0, n/m); the
    t_stabilizer collects every t whose image is circulant and lies in the
    member set, and is a subgroup of Z_{n/m} under addition.
    """

    base: Circulant
    m: int
    members: tuple[Circulant, ...]
    t_stabilizer: tuple[int, ...]
    outcomes: tuple  # of (t, kind, Optional[Circulant])

    def image_at(self, t: int) -> Optional[Circulant]:
        return self.outcomes[t][2]


def type2_set(g: Circulant, m: int) -> Type2Orbit:
    """Scan every t in [0, n/m) and collect the Type-2 orbit of g.

    Each t is prefiltered by the elementwise offset transform: an
    asymmetric image difference set already proves the image is not
    circulant. Every surviving t goes through the full edge-set
    classification, so no membership claim rests on the shortcut alone.
    """
    params = valid_type2_params(g.n, m, g.conn)
    if not params.cube_divides:
        raise InvalidParams(f"m^3 = {m ** 3} does not divide n = {g.n}")
    if not params.divisible_offsets:
        raise PreconditionViolation(f"no offset of {g.label()} is divisible by m={m}")
    if len(g.conn) < 3:
        raise PreconditionViolation("Type-2 sets need at least 3 offsets")
    n = g.n
    full = symmetric_set(g)
    outcomes = []
    members = {g}
    for t in range(n // m):
        tm = ThetaMap(n, m, t)
        cand = theta_offsets(tm, full)
        cs = set(cand)
        if any((n - s) not in cs for s in cs):
            outcomes.append((t, "not_circulant", None))
            continue
        cls = classify_theta(tm, g)
        outcomes.append((t, cls.kind, cls.image))
        if cls.kind == "type2":
            members.add(cls.image)
    member_tuple = tuple(sorted(members))
    t_stab = tuple(t for t, _, img in outcomes if img is not None and img in members)
    return Type2Orbit(
        base=g, m=m, members=member_tuple, t_stabilizer=t_stab, outcomes=tuple(outcomes)
    )


@dataclass(frozen=True)
class Type2GroupReport:
    """Subgroup and abelian-group checks for a Type-2 orbit."""

    t_modulus: int
    contains_zero: bool
    closed: bool
    has_inverses: bool
    composition_closed: bool
    abelian: bool
    identity_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.contains_zero
            and self.closed
            and self.has_inverses
            and self.composition_closed
            and self.abelian
            and self.identity_ok
        )


def type2_group_check(orbit: Type2Orbit) -> Type2GroupReport:
    """Verify the t-stabilizer is a subgroup of Z_{n/m} and that the induced
    composition on members is abelian with the base as identity."""
    q = orbit.base.n // orbit.m
    ts = set(orbit.t_stabilizer)
    contains_zero = 0 in ts
    closed = all((a + b) % q in ts for a in ts for b in ts)
    has_inverses = all((-a) % q in ts for a in ts)

    image_at = {t: orbit.outcomes[t][2] for t in ts}
    rep = {}
    for t in sorted(ts):
        img = image_at[t]
        if img not in rep:
            rep[img] = t
    composition_closed = True
    abelian = True
    table = {}
    for ma, ta in rep.items():
        for mb, tb in rep.items():
            img = image_at.get((ta + tb) % q) if (ta + tb) % q in ts else None
            if img is None or img not in rep:
                composition_closed = False
            table[(ma, mb)] = img
    for ma in rep:
        for mb in rep:
            if table[(ma, mb)] != table[(mb, ma)]:
                abelian = False
    identity_ok = all(table.get((orbit.base, mb)) == mb for mb in rep)
    return Type2GroupReport(
        t_modulus=q,
        contains_zero=contains_zero,
        closed=closed,
        has_inverses=has_inverses,
        composition_closed=composition_closed,
        abelian=abelian,
        identity_ok=identity_ok,
    )


def theta_compose(a: ThetaMap, b: ThetaMap) -> ThetaMap:
    """Compose two transforms at the same (n, m): t values add mod n/m.

    The composed parameter map is checked pointwise against the actual
    composition of the two vertex permutations.
    """
    if a.n != b.n or a.m != b.m:
        raise ParamMismatch(f"cannot compose {a.label()} with {b.label()}")
    c = ThetaMap(a.n, a.m, (a.t + b.t) % (a.n // a.m))
    pa, pb, pc = theta_vertex_map(a), theta_vertex_map(b), theta_vertex_map(c)
    assert all(pc[x] == pa[pb[x]] for x in range(a.n)), "composition law violated"
    return c
