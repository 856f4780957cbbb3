"""Constructive Cartesian products of circulant graphs, each verified against
an explicit product graph, and an experimental scanner for the product
conjectures."""

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .circulant import Circulant, EdgeGraph, is_connected, realize
from .errors import EvenOrder, NotConnected, NotCoprime, OrderTooSmall
from .iso_oracle import IsoWitness, make_witness, search_isomorphism
from .residue import reflexive_reduce
from .type2 import ThetaMap, classify_theta, type2_set

EXPLICIT_VERIFY_CAP = 10_000  # product orders above this skip the edge-level check
ORACLE_VERIFY_CAP = 60


def cartesian_edges(a: EdgeGraph, b: EdgeGraph) -> EdgeGraph:
    """Cartesian product of two explicit graphs; vertex (x, y) encoded x*b.n + y."""
    n = b.n
    es = set()
    for x, y in a.edges:
        for z in range(n):
            u, v = x * n + z, y * n + z
            es.add((u, v) if u < v else (v, u))
    for x, y in b.edges:
        for z in range(a.n):
            u, v = z * n + x, z * n + y
            es.add((u, v) if u < v else (v, u))
    return EdgeGraph(a.n * n, frozenset(es))


def embedding_witness(g: Circulant, h: Circulant, result: Circulant) -> IsoWitness:
    """Witness from the explicit pair-encoded product onto the realized result.

    The relabeling is (x, y) -> n*x + m*y mod mn, the bijection under
    which an offset r on the order-m side becomes exactly n*r and an offset
    s on the order-n side exactly m*s; the plain residue-pair map would
    only match up to a unit twist.
    """
    m, n = g.n, h.n
    prod = cartesian_edges(realize(g), realize(h))
    relabel = [0] * (m * n)
    for x in range(m):
        for y in range(n):
            relabel[x * n + y] = (n * x + m * y) % (m * n)
    return make_witness(prod, realize(result), relabel, f"crt-embedding({m}x{n})")


def product_embedding_equal(g: Circulant, h: Circulant, result: Circulant) -> bool:
    """True iff the relabeled explicit product is edge-identical to the result.

    A verified witness with equal edge counts maps the product edge set
    bijectively onto the realized one, which is exactly edge-identity
    under the relabeling.
    """
    return embedding_witness(g, h, result).verified


def product_coprime(g: Circulant, h: Circulant, verify_cap: int = EXPLICIT_VERIFY_CAP) -> Circulant:
    """Product of connected circulants with coprime orders m, n > 2:
    C_mn(nR union mS), verified edge-for-edge up to the cap."""
    m, n = g.n, h.n
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    if m <= 2 or n <= 2:
        raise OrderTooSmall("both factors must have order > 2")
    if not is_connected(g):
        raise NotConnected(f"{g.label()} is not connected")
    if not is_connected(h):
        raise NotConnected(f"{h.label()} is not connected")
    offsets = [n * r for r in g.conn] + [m * s for s in h.conn]
    result = Circulant(m * n, reflexive_reduce(offsets, m * n))
    if m * n <= verify_cap:
        assert product_embedding_equal(g, h, result), "explicit product mismatch"
    return result


def _prism_edges(g: Circulant) -> EdgeGraph:
    """Explicit two-layer product: copies (0, v) and (1, v) plus rungs."""
    n = g.n
    eg = realize(g)
    es = set()
    for layer in (0, 1):
        for a, b in eg.edges:
            es.add((layer * n + a, layer * n + b))
    for v in range(n):
        es.add((v, n + v))
    return EdgeGraph(2 * n, frozenset(es))


def _c4_ring_edges(g: Circulant) -> EdgeGraph:
    """Explicit four-layer product: a 4-cycle of copies of g."""
    n = g.n
    eg = realize(g)
    es = set()
    for layer in range(4):
        for a, b in eg.edges:
            es.add((layer * n + a, layer * n + b))
        for v in range(n):
            u, w = layer * n + v, ((layer + 1) % 4) * n + v
            es.add((u, w) if u < w else (w, u))
    return EdgeGraph(4 * n, frozenset(es))


def product_prism(g: Circulant, oracle_cap: int = ORACLE_VERIFY_CAP) -> Circulant:
    """Two-layer product of an odd-order circulant: C_{2N}(2R union {N}).

    For result orders up to the cap the formula result is checked against
    the explicit layered graph by the isomorphism search oracle.
    """
    if g.n % 2 == 0:
        raise EvenOrder(f"{g.label()} must have odd order")
    N = g.n
    result = Circulant(2 * N, reflexive_reduce([2 * r for r in g.conn] + [N], 2 * N))
    if 2 * N <= oracle_cap:
        w = search_isomorphism(_prism_edges(g), realize(result))
        assert w is not None and w.verified, "prism product failed oracle check"
    return result


def product_c4(g: Circulant, oracle_cap: int = ORACLE_VERIFY_CAP) -> Circulant:
    """Four-cycle product of an odd-order circulant: C_{4N}(4S union {N})."""
    if g.n % 2 == 0:
        raise EvenOrder(f"{g.label()} must have odd order")
    N = g.n
    result = Circulant(4 * N, reflexive_reduce([4 * s for s in g.conn] + [N], 4 * N))
    if 4 * N <= oracle_cap:
        w = search_isomorphism(_c4_ring_edges(g), realize(result))
        assert w is not None and w.verified, "C4 product failed oracle check"
    return result


def valid_type2_ms(g: Circulant) -> tuple[int, ...]:
    """All m > 1 with m^3 | n and some offset divisible by m."""
    out = []
    m = 2
    while m**3 <= g.n:
        if g.n % m**3 == 0 and any(r % m == 0 for r in g.conn):
            out.append(m)
        m += 1
    return tuple(out)


def has_type2_partner(g: Circulant) -> Optional[tuple[int, int, Circulant]]:
    """First (m, t, image) making g Type-2 isomorphic to something, else None."""
    if len(g.conn) < 3:
        return None
    for m in valid_type2_ms(g):
        orbit = type2_set(g, m)
        for t, kind, img in orbit.outcomes:
            if kind == "type2":
                return (m, t, img)
    return None


@dataclass(frozen=True)
class LiftCheck:
    """One transfer check: a factor witness (m, t) lifted to the product."""

    factor: Circulant
    m: int
    t: int
    lifted_t: int
    kind: str  # classification of the lifted transform on the product
    agrees: bool  # True when the lift is again Type-2


@dataclass(frozen=True)
class ConjectureCase:
    left: Circulant
    right: Circulant
    product: Circulant
    left_type2: bool
    right_type2: bool
    product_type2: bool
    lifts: tuple[LiftCheck, ...]

    @property
    def consistent(self) -> bool:
        return self.product_type2 == (self.left_type2 or self.right_type2)


@dataclass(frozen=True)
class ConjectureReport:
    """Experimental scan; consistency within the budget is not a proof."""

    n1: int
    n2: int
    budget: int
    cases: tuple[ConjectureCase, ...]
    exhausted: bool  # True when the budget cut enumeration short
    header: str = field(
        default="experimental: checks sampled cases only and cannot falsify beyond its budget"
    )

    @property
    def counterexamples(self) -> tuple[ConjectureCase, ...]:
        return tuple(c for c in self.cases if not c.consistent)

    @property
    def failed_lifts(self) -> tuple[LiftCheck, ...]:
        return tuple(l for c in self.cases for l in c.lifts if not l.agrees)


def _connected_sets(n: int):
    half = n // 2
    for size in range(1, half + 1):
        for conn in itertools.combinations(range(1, half + 1), size):
            g = Circulant(n, conn)
            if is_connected(g):
                yield g


def _diagonal_pairs(n1: int, n2: int, limit: int):
    """Pair the two enumerations diagonally so both sides vary early on.

    One extra set per side is drawn so a scan can tell a completed
    enumeration from a budget cut.
    """
    left = list(itertools.islice(_connected_sets(n1), limit + 1))
    right = list(itertools.islice(_connected_sets(n2), limit + 1))
    for s in range(len(left) + len(right) - 1):
        for i in range(min(s, len(left) - 1), -1, -1):
            j = s - i
            if j < len(right):
                yield left[i], right[j]


def _lift_checks(factor: Circulant, other_order: int, product: Circulant) -> list:
    """Conjecture-5 style transfers: factor witness (m, t) -> product (m, t*n2)."""
    out = []
    if len(factor.conn) < 3 or len(product.conn) < 3:
        return out
    for m in valid_type2_ms(factor):
        orbit = type2_set(factor, m)
        for t, kind, _ in orbit.outcomes:
            if kind != "type2":
                continue
            lifted_t = (t * other_order) % (product.n // m)
            cls = classify_theta(ThetaMap(product.n, m, lifted_t), product)
            out.append(
                LiftCheck(
                    factor=factor,
                    m=m,
                    t=t,
                    lifted_t=lifted_t,
                    kind=cls.kind,
                    agrees=cls.kind == "type2",
                )
            )
            break  # one witness per m keeps the scan desk-scale
    return out


def scan_conjecture(n1: int, n2: int, budget: int = 16, pairs=None) -> ConjectureReport:
    """Scan products C_{n1}(R1) x C_{n2}(R2) for conjecture-consistent behaviour.

    For each sampled connected pair the scanner asks whether the product
    has a nonempty Type-2 set for any valid m and whether either factor
    does, and records any disagreement verbatim. Factor Type-2 witnesses
    are additionally lifted to the product and reclassified there.
    """
    if gcd(n1, n2) != 1:
        raise NotCoprime(f"gcd({n1}, {n2}) != 1")
    if pairs is None:
        pair_iter = _diagonal_pairs(n1, n2, budget)
    else:
        pair_iter = iter(pairs)
    cases = []
    exhausted = False
    for left, right in pair_iter:
        if len(cases) >= budget:
            exhausted = True
            break
        product = product_coprime(left, right)
        left_t2 = has_type2_partner(left) is not None
        right_t2 = has_type2_partner(right) is not None
        product_t2 = has_type2_partner(product) is not None
        lifts = tuple(
            _lift_checks(left, n2, product) + _lift_checks(right, n1, product)
        )
        cases.append(
            ConjectureCase(
                left=left,
                right=right,
                product=product,
                left_type2=left_t2,
                right_type2=right_t2,
                product_type2=product_t2,
                lifts=lifts,
            )
        )
    return ConjectureReport(n1=n1, n2=n2, budget=budget, cases=tuple(cases), exhausted=exhausted)
