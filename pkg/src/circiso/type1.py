"""The unit-multiplication action on connection sets: orbits, their abelian
group structure, and least-unit isomorphism witnesses."""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from .circulant import Circulant
from .errors import NotAUnit, OrderMismatch
from .residue import reflexive_reduce, units


def adams_apply(g: Circulant, x: int) -> Circulant:
    """Multiply the connection set by a unit x and reduce reflexively."""
    if gcd(g.n, x) != 1:
        raise NotAUnit(f"gcd({g.n}, {x}) != 1")
    out = Circulant(g.n, reflexive_reduce((x * s for s in g.conn), g.n))
    # unit multiplication permutes reflexive classes, so sizes must agree
    assert len(out.conn) == len(g.conn)
    return out


def adams_vertex_map(n: int, x: int) -> tuple[int, ...]:
    """The vertex bijection v -> x*v mod n realizing C_n(R) ~ C_n(xR)."""
    if gcd(n, x) != 1:
        raise NotAUnit(f"gcd({n}, {x}) != 1")
    return tuple((x * v) % n for v in range(n))


@dataclass(frozen=True)
class Type1Orbit:
    """Orbit of a connection set under all units of Z_n.

    reps[i] is the least unit sending the base to members[i]; the
    stabilizer collects every unit fixing the base.
    """

    base: Circulant
    members: tuple[Circulant, ...]
    reps: tuple[int, ...]
    stabilizer: tuple[int, ...]

    def unit_for(self, member: Circulant) -> int:
        return self.reps[self.members.index(member)]


@lru_cache(maxsize=128)
def type1_set(g: Circulant) -> Type1Orbit:
    """Compute the full orbit of g under unit multiplication."""
    least: dict[Circulant, int] = {}
    stab = []
    for x in units(g.n):  # ascending, so first hit records the least unit
        img = adams_apply(g, x)
        if img not in least:
            least[img] = x
        if img == g:
            stab.append(x)
    members = tuple(sorted(least))
    orbit = Type1Orbit(
        base=g,
        members=members,
        reps=tuple(least[m] for m in members),
        stabilizer=tuple(stab),
    )
    assert len(members) * len(stab) == len(units(g.n)), "orbit-stabilizer violated"
    return orbit


@dataclass(frozen=True)
class GroupTable:
    """Multiplication table over orbit members, indexed by member position."""

    members: tuple[Circulant, ...]
    entries: dict  # (i, j) -> k meaning members[i] o members[j] = members[k]
    closed: bool
    commutative: bool
    identity_ok: bool
    associativity: str  # "exhaustive" or "structural"

    @property
    def ok(self) -> bool:
        return self.closed and self.commutative and self.identity_ok


def type1_group_table(orbit: Type1Orbit, exhaustive_assoc_limit: int = 30) -> GroupTable:
    """Build the induced composition table and verify the group axioms.

    Identity and commutativity are checked exhaustively. Associativity is
    enumerated over all triples up to the size limit; past it the action
    law (x*(y*R) = (xy)*R) already forces associativity, so it is only
    recorded as structural.
    """
    n = orbit.base.n
    members, reps = orbit.members, orbit.reps
    index = {m: i for i, m in enumerate(members)}
    entries = {}
    closed = True
    for i in range(len(members)):
        for j in range(len(members)):
            prod = adams_apply(orbit.base, (reps[i] * reps[j]) % n)
            k = index.get(prod)
            if k is None:
                closed = False
            entries[(i, j)] = k
    commutative = all(
        entries[(i, j)] == entries[(j, i)]
        for i in range(len(members))
        for j in range(len(members))
    )
    b = index[orbit.base]
    identity_ok = all(entries[(b, j)] == j and entries[(j, b)] == j for j in range(len(members)))
    if closed and len(members) <= exhaustive_assoc_limit:
        assoc_holds = all(
            entries[(entries[(i, j)], k)] == entries[(i, entries[(j, k)])]
            for i in range(len(members))
            for j in range(len(members))
            for k in range(len(members))
        )
        associativity = "exhaustive" if assoc_holds else "failed"
    else:
        associativity = "structural"
    return GroupTable(
        members=members,
        entries=entries,
        closed=closed,
        commutative=commutative,
        identity_ok=identity_ok,
        associativity=associativity,
    )


def is_adams_isomorphic(a: Circulant, b: Circulant) -> Optional[int]:
    """Least unit x with x*a = b, or None when no unit works."""
    if a.n != b.n:
        raise OrderMismatch(f"orders differ: {a.n} vs {b.n}")
    if len(a.conn) != len(b.conn):
        return None
    orbit = type1_set(a)
    try:
        return orbit.unit_for(b)
    except ValueError:
        return None
