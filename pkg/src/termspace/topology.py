"""The terminal space of a monoid: its strongly irreducible ideals under the
hull-kernel topology.

Points are indexed ``0..k-1`` in lattice order. Sets of points are passed in
as iterables of point indices and stored as frozensets; bulk loops over all
subsets work on bitmasks (bit ``j`` = point ``j``).

The kernel of a nonempty set of points is the intersection of those ideals;
the hull of an ideal ``A`` is the set of points containing ``A``. The closure
of ``X`` is ``hull(kernel(X))``, and the closure of the empty set is empty.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .ideals import Ideal, IdealLattice, enumerate_ideals, intersection, principal_ideal
from .monoid import ElementSet, FiniteMonoid, InvariantViolation, power_sequence, units


class TooManyPoints(ValueError):
    pass


class EmptyPointSet(ValueError):
    pass


class EmptyClosedSet(ValueError):
    pass


class NotACover(ValueError):
    def __init__(self, point: int):
        super().__init__(f"point {point} is not covered")
        self.point = point


class NotOpen(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    """Limits for loops over subsets of points.

    Up to ``exhaustive_limit`` points every subset (and every pair of
    subsets) is visited. Between that and ``max_points`` the loops run on
    ``samples`` random subsets, but only when ``sample`` is set.
    """

    max_points: int = 20
    exhaustive_limit: int = 12
    sample: bool = False
    seed: int = 0
    samples: int = 256


DEFAULT_CONFIG = SearchConfig()


def _bits_of(points: Iterable[int]) -> int:
    out = 0
    for p in points:
        out |= 1 << p
    return out


def _indices(bits: int) -> frozenset[int]:
    return frozenset(ElementSet(bits.bit_length(), bits))


@dataclass(frozen=True)
class ClosedSet:
    members: frozenset[int]
    # canonical kernel: intersection of the members; None for the empty set
    kernel_ideal: Ideal | None

    @property
    def bits(self) -> int:
        return _bits_of(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return p in self.members

    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))


@dataclass(frozen=True)
class TerminalSpace:
    monoid: FiniteMonoid
    lattice: IdealLattice = field(repr=False)
    points: tuple[Ideal, ...]
    # up[i] = bitmask of points containing points[i], i.e. the closure of {i}
    up: tuple[int, ...] = field(repr=False)

    def __len__(self):
        return len(self.points)

    @property
    def all_bits(self) -> int:
        return (1 << len(self.points)) - 1

    @cached_property
    def point_bits(self) -> tuple[int, ...]:
        return tuple(p.bits for p in self.points)

    def point_index(self, ideal: ElementSet) -> int:
        for k, p in enumerate(self.points):
            if p.bits == ideal.bits:
                return k
        raise KeyError(repr(ideal))

    def specializes(self, i: int, j: int) -> bool:
        """True when point ``j`` lies in the closure of point ``i``."""
        return bool(self.up[i] >> j & 1)

    def hull_bits(self, ideal_bits: int) -> int:
        out = 0
        for j, pb in enumerate(self.point_bits):
            if ideal_bits & ~pb == 0:
                out |= 1 << j
        return out

    def kernel_bits(self, x_bits: int) -> int:
        out = self.monoid.full_bits
        for j, pb in enumerate(self.point_bits):
            if x_bits >> j & 1:
                out &= pb
        return out

    def closure_bits(self, x_bits: int) -> int:
        return self.hull_bits(self.kernel_bits(x_bits)) if x_bits else 0

    def closed_from_bits(self, bits: int) -> ClosedSet:
        if not bits:
            return ClosedSet(frozenset(), None)
        return ClosedSet(_indices(bits), Ideal(self.monoid.order, self.kernel_bits(bits)))

    @cached_property
    def closed_sets(self) -> tuple[ClosedSet, ...]:
        return enumerate_closed_sets(self)

    @cached_property
    def closed_bits(self) -> frozenset[int]:
        return frozenset(c.bits for c in self.closed_sets)


def build_terminal_space(m: FiniteMonoid, lattice: IdealLattice | None = None) -> TerminalSpace:
    if lattice is None:
        lattice = enumerate_ideals(m)
    points = lattice.with_flag("strongly_irreducible")
    for p in points:
        if p.bits == m.full_bits:
            raise InvariantViolation("a point of the terminal space is not proper")
    up = tuple(
        _bits_of(j for j, q in enumerate(points) if p.bits & ~q.bits == 0)
        for p in points
    )
    return TerminalSpace(m, lattice, tuple(points), up)


def kernel(space: TerminalSpace, points: Iterable[int]) -> Ideal:
    bits = _bits_of(points)
    if not bits:
        raise EmptyPointSet("the kernel of an empty set of points is undefined")
    if bits >> len(space.points):
        raise IndexError("point index out of range")
    return Ideal(space.monoid.order, space.kernel_bits(bits))


def hull(space: TerminalSpace, ideal: ElementSet) -> ClosedSet:
    return space.closed_from_bits(space.hull_bits(ideal.bits))


def hk_closure(space: TerminalSpace, points: Iterable[int]) -> ClosedSet:
    bits = _bits_of(points)
    if bits >> len(space.points):
        raise IndexError("point index out of range")
    return space.closed_from_bits(space.closure_bits(bits))


def enumerate_closed_sets(space: TerminalSpace) -> tuple[ClosedSet, ...]:
    found = {0}
    for I in space.lattice.ideals:
        found.add(space.hull_bits(I.bits))
    for a in found:
        for b in found:
            if a | b not in found or a & b not in found:
                raise InvariantViolation("closed sets are not closed under union/intersection")
    closed = [space.closed_from_bits(b) for b in found]
    for c in closed:
        if c.kernel_ideal is not None and space.hull_bits(c.kernel_ideal.bits) != c.bits:
            raise InvariantViolation("closed set is not the hull of its kernel")
    return tuple(sorted(closed, key=ClosedSet.sort_key))


def topological_closure(space: TerminalSpace, points: Iterable[int]) -> ClosedSet:
    """Smallest enumerated closed set containing the given points."""
    bits = _bits_of(points)
    out = space.all_bits
    for c in space.closed_bits:
        if bits & ~c == 0:
            out &= c
    return space.closed_from_bits(out)


# -- vectorized kernels and hulls over many subsets at once -------------------

class _HullKernel:
    """Kernel/closure arithmetic for a family of ideals, on arrays of subset masks."""

    def __init__(self, family_bits: Sequence[int], full_bits: int, order: int):
        self.k = len(family_bits)
        # ideal bitmasks fit a uint64 for orders up to 64
        self.dtype = np.uint64 if order <= 64 else object
        self.family = [self._scalar(b) for b in family_bits]
        self.full = self._scalar(full_bits)

    def _scalar(self, v):
        return np.uint64(v) if self.dtype is np.uint64 else v

    def arr(self, values) -> np.ndarray:
        return np.asarray([int(v) for v in values], dtype=self.dtype)

    def kern(self, xs: np.ndarray) -> np.ndarray:
        out = np.full(xs.shape, self.full, dtype=self.dtype)
        for j, fb in enumerate(self.family):
            sel = ((xs >> j) & 1).astype(bool)
            out[sel] &= fb
        return out

    def hull(self, ideals: np.ndarray) -> np.ndarray:
        out = np.zeros(ideals.shape, dtype=np.int64)
        for j, fb in enumerate(self.family):
            inside = (ideals & ~fb) == 0 if self.dtype is np.uint64 else np.array(
                [int(v) & ~int(fb) == 0 for v in ideals], dtype=bool)
            out[inside] |= 1 << j
        return out

    def closure(self, xs: np.ndarray) -> np.ndarray:
        out = self.hull(self.kern(xs))
        out[xs == 0] = 0
        return out


def _subset_masks(k: int, config: SearchConfig, rng: np.random.Generator) -> tuple[np.ndarray, bool]:
    """Subset masks to visit, and whether the visit is exhaustive."""
    if k > config.max_points:
        raise TooManyPoints(f"{k} points exceeds the cap of {config.max_points}")
    if k <= config.exhaustive_limit:
        return np.arange(1 << k, dtype=np.int64), True
    if not config.sample:
        raise TooManyPoints(
            f"{k} points is above the exhaustive limit {config.exhaustive_limit}; enable sampling")
    xs = rng.integers(0, 1 << k, size=config.samples, dtype=np.int64)
    xs = np.unique(np.concatenate([xs, [0, (1 << k) - 1]]))
    return xs, False


@dataclass(frozen=True)
class Outcome:
    ok: bool
    witness: object = None


@dataclass(frozen=True)
class KuratowskiReport:
    exhaustive: bool
    subsets_checked: int
    # check name -> Outcome; names listed in KURATOWSKI_CHECKS
    checks: dict
    # literal readings of the two set-level identities, reported only
    literal: dict

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.checks.values())


KURATOWSKI_CHECKS = (
    "empty", "extensive", "idempotent", "additive",
    "hull_of_whole", "closure_is_topological", "union_via_kernels",
    "intersection_via_joins", "generated_radical_chain",
)


def _first_pair_failure(xs: np.ndarray, fail_rows) -> tuple | None:
    for x in xs:
        bad = fail_rows(int(x))
        if bad is not None:
            return bad
    return None


def verify_kuratowski(space: TerminalSpace, config: SearchConfig = DEFAULT_CONFIG) -> KuratowskiReport:
    """Exhaustive (or sampled) check of the closure axioms and the hull/kernel identities.

    Witnesses are subset bitmasks over point indices.
    """
    m = space.monoid
    k = len(space.points)
    rng = np.random.default_rng(config.seed)
    xs, exhaustive = _subset_masks(k, config, rng)
    hk = _HullKernel(space.point_bits, m.full_bits, m.order)
    cl = hk.closure(xs)
    checks, literal = {}, {}

    checks["empty"] = Outcome(space.closure_bits(0) == 0)

    bad = np.nonzero(xs & ~cl)[0]
    checks["extensive"] = Outcome(bad.size == 0, int(xs[bad[0]]) if bad.size else None)

    bad = np.nonzero(hk.closure(cl) != cl)[0]
    checks["idempotent"] = Outcome(bad.size == 0, int(xs[bad[0]]) if bad.size else None)

    def additive_row(x):
        cx = space.closure_bits(x)
        diff = hk.closure(x | xs) != (cx | cl)
        if diff.any():
            return (x, int(xs[np.argmax(diff)]))
        return None

    wit = _first_pair_failure(xs, additive_row)
    checks["additive"] = Outcome(wit is None, wit)

    checks["hull_of_whole"] = Outcome(space.hull_bits(m.full_bits) == 0)

    wit = None
    for x, c in zip(xs, cl):
        if topological_closure(space, _indices(int(x))).bits != int(c):
            wit = int(x)
            break
    checks["closure_is_topological"] = Outcome(wit is None, wit)

    nonempty = xs[xs != 0]
    ne_cl = hk.closure(nonempty)
    ne_kern = hk.kern(nonempty)

    def union_row(x):
        kx = space.kernel_bits(x)
        cx = space.closure_bits(x)
        lhs = hk.hull(ne_kern & hk._scalar(kx))
        diff = lhs != (cx | ne_cl)
        if diff.any():
            return (x, int(nonempty[np.argmax(diff)]))
        return None

    wit = _first_pair_failure(nonempty, union_row)
    checks["union_via_kernels"] = Outcome(wit is None, wit)

    def literal_union_row(x):
        cx = space.closure_bits(x)
        diff = (cx | ne_cl) != hk.closure(x & nonempty)
        if diff.any():
            return (x, int(nonempty[np.argmax(diff)]))
        return None

    def literal_meet_row(x):
        cx = space.closure_bits(x)
        diff = (cx & ne_cl) != hk.closure(x & nonempty)
        if diff.any():
            return (x, int(nonempty[np.argmax(diff)]))
        return None

    wit = _first_pair_failure(nonempty, literal_union_row)
    literal["union_of_closures_is_closure_of_meet"] = Outcome(wit is None, wit)
    wit = _first_pair_failure(nonempty, literal_meet_row)
    literal["meet_of_closures_is_closure_of_meet"] = Outcome(wit is None, wit)

    checks["intersection_via_joins"] = _check_meet_of_hulls(space)

    radical_masks = _power_masks(m)
    wit = None
    lit_wit = None
    for x in nonempty:
        x = int(x)
        gen = 0
        for j, pb in enumerate(space.point_bits):
            if x >> j & 1:
                gen |= pb
        rad = sum(1 << e for e, pm in enumerate(radical_masks) if pm & gen)
        c, hg, hr = space.closure_bits(x), space.hull_bits(gen), space.hull_bits(rad)
        if wit is None and not (hg & ~c == 0 and hr & ~hg == 0):
            wit = x
        if lit_wit is None and not (c & ~hg == 0 and hg & ~hr == 0):
            lit_wit = x
    checks["generated_radical_chain"] = Outcome(wit is None, wit)
    literal["closure_below_generated_below_radical"] = Outcome(lit_wit is None, lit_wit)
    return KuratowskiReport(exhaustive, int(xs.size), checks, literal)


def _power_masks(m: FiniteMonoid) -> list[int]:
    out = []
    for x in range(m.order):
        seq, _ = power_sequence(m, x)
        out.append(_bits_of(seq))
    return out


def _check_meet_of_hulls(space: TerminalSpace) -> Outcome:
    """Intersection of hulls equals the hull of the join, over families of ideals."""
    ideals = [I.bits for I in space.lattice.ideals]
    if len(ideals) <= 12:
        families = (f for r in range(1, len(ideals) + 1) for f in combinations(range(len(ideals)), r))
    else:
        families = combinations(range(len(ideals)), 2)
    for fam in families:
        meet, join = space.all_bits, 0
        for a in fam:
            meet &= space.hull_bits(ideals[a])
            join |= ideals[a]
        if meet != space.hull_bits(join):
            return Outcome(False, fam)
    return Outcome(True)


# -- closure operators on other classes of ideals -----------------------------

@dataclass(frozen=True)
class ClosureClassResult:
    # absorption: A & B <= I implies A <= I or B <= I, for lattice A, B and I in F
    is_kuratowski: bool
    witness: tuple | None
    # direct evaluation of the closure axioms for the operator restricted to F
    direct_kuratowski: bool
    direct_witness: tuple | None
    exhaustive: bool

    @property
    def agree(self) -> bool:
        return self.is_kuratowski == self.direct_kuratowski


def closure_class_check(m: FiniteMonoid, lattice: IdealLattice, family: Iterable[ElementSet],
                        config: SearchConfig = DEFAULT_CONFIG) -> ClosureClassResult:
    """Evaluate the hull-kernel operator on a class ``F`` of proper ideals two ways.

    The direct route checks the four closure axioms of ``X -> {J in F : J >= K(X)}``
    over subsets of ``F`` (all of them up to ``config.exhaustive_limit``
    members; above that, over the distinct kernels, which is exact since the
    operator only sees ``K(X)``). The other route is the absorption condition.
    """
    fam = []
    for I in family:
        lattice.position(I)
        if I.bits == m.full_bits:
            raise ValueError("the class must consist of proper ideals")
        if I.bits not in fam:
            fam.append(I.bits)
    fam.sort(key=lambda b: Ideal(m.order, b).sort_key())
    F = [Ideal(m.order, b) for b in fam]

    witness = None
    ideals = lattice.ideals
    for I in F:
        for a in range(len(ideals)):
            A = ideals[a].bits
            for b in range(a, len(ideals)):
                B = ideals[b].bits
                if (A & B) & ~I.bits == 0 and A & ~I.bits and B & ~I.bits:
                    witness = (ideals[a], ideals[b], I)
                    break
            if witness:
                break
        if witness:
            break

    if len(fam) <= config.exhaustive_limit:
        direct_witness = _direct_axioms_exhaustive(fam, m)
        exhaustive = True
    else:
        direct_witness = _direct_axioms_by_kernels(fam, m)
        exhaustive = False
    return ClosureClassResult(witness is None, witness, direct_witness is None, direct_witness, exhaustive)


def _direct_axioms_exhaustive(fam: list[int], m: FiniteMonoid) -> tuple | None:
    k = len(fam)
    hk = _HullKernel(fam, m.full_bits, m.order)
    xs = np.arange(1 << k, dtype=np.int64)
    cl = hk.closure(xs)
    if cl[0] != 0:
        return ("empty",)
    bad = np.nonzero(xs & ~cl)[0]
    if bad.size:
        return ("extensive", int(xs[bad[0]]))
    bad = np.nonzero(hk.closure(cl) != cl)[0]
    if bad.size:
        return ("idempotent", int(xs[bad[0]]))
    for x in range(1 << k):
        diff = cl[x | xs] != (cl[x] | cl)
        if diff.any():
            return ("additive", x, int(np.argmax(diff)))
    return None


def _direct_axioms_by_kernels(fam: list[int], m: FiniteMonoid) -> tuple | None:
    # every nonempty subset of F has its kernel in the meet-closure of F
    kernels = set(fam)
    frontier = list(kernels)
    while frontier:
        nxt = []
        for a in frontier:
            for b in fam:
                c = a & b
                if c not in kernels:
                    kernels.add(c)
                    nxt.append(c)
        frontier = nxt

    def hull_f(ideal):
        return frozenset(i for i, f in enumerate(fam) if ideal & ~f == 0)

    for i, f in enumerate(fam):
        if i not in hull_f(f):
            return ("extensive", 1 << i)
    for a in sorted(kernels):
        ha = hull_f(a)
        if hull_f(_kernel_of(fam, ha, m)) != ha:
            return ("idempotent", a)
        for b in sorted(kernels):
            if hull_f(a & b) != ha | hull_f(b):
                return ("additive", a, b)
    return None


def _kernel_of(fam, idx, m):
    out = m.full_bits
    for i in idx:
        out &= fam[i]
    return out


# -- separation, compactness, irreducibility ----------------------------------

@dataclass(frozen=True)
class SeparationResult:
    t0: bool
    t1: bool
    antichain: bool
    # (i, j) with points[i] strictly inside points[j], or two points with equal closures
    witness: tuple[int, int] | None

    @property
    def t1_iff_antichain(self) -> bool:
        return self.t1 == self.antichain


def separation_check(space: TerminalSpace) -> SeparationResult:
    k = len(space.points)
    closures = [space.closure_bits(1 << i) for i in range(k)]
    if [c for c in closures] != list(space.up):
        raise InvariantViolation("closure of a point differs from its up-set")
    t0 = len(set(closures)) == k
    t1 = all(c in space.closed_bits and c == 1 << i for i, c in enumerate(closures))
    witness = None
    for i in range(k):
        for j in range(k):
            if i != j and space.point_bits[i] & ~space.point_bits[j] == 0:
                witness = (i, j)
                break
        if witness:
            break
    return SeparationResult(t0, t1, witness is None, witness)


def open_sets(space: TerminalSpace) -> tuple[frozenset[int], ...]:
    """Complements of the closed sets, in the reverse of closed-set order."""
    return tuple(_indices(space.all_bits & ~c.bits) for c in reversed(space.closed_sets))


def compactness_witness(space: TerminalSpace, cover: Sequence[Iterable[int]]) -> tuple[int, ...]:
    """Indices of a finite subcover of an open cover.

    Greedy in the spirit of the finite-intersection argument: take the open
    set whose closed complement has the largest kernel ideal first (the whole
    space has the empty complement, whose kernel is all of ``M``), then drop
    members that turn out redundant.
    """
    opens = [_bits_of(u) for u in cover]
    full = space.all_bits
    for u in opens:
        if u & ~full:
            raise IndexError("point index out of range")
        if full & ~u not in space.closed_bits:
            raise NotOpen(f"{sorted(_indices(u))} is not open")
    covered = 0
    for u in opens:
        covered |= u
    if covered != full:
        missing = full & ~covered
        raise NotACover((missing & -missing).bit_length() - 1)

    def kernel_size(u):
        comp = full & ~u
        return len(ElementSet(space.monoid.order, space.kernel_bits(comp))) if comp else space.monoid.order + 1

    chosen, covered = [], 0
    while covered != full:
        best = min(
            (i for i, u in enumerate(opens) if u & ~covered),
            key=lambda i: (-kernel_size(opens[i]), -bin(opens[i] & ~covered).count("1"), i),
        )
        chosen.append(best)
        covered |= opens[best]
    for i in list(reversed(chosen)):
        rest = 0
        for j in chosen:
            if j != i:
                rest |= opens[j]
        if rest == full:
            chosen.remove(i)
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible_topological: bool
    kernel_strongly_irreducible: bool
    generic_point: int | None
    unique: bool
    # points p of the set whose closure is the whole set
    generic_count: int = 0

    @property
    def consistent(self) -> bool:
        if self.irreducible_topological != self.kernel_strongly_irreducible:
            return False
        if self.irreducible_topological:
            return self.generic_point is not None and self.unique
        return self.generic_count == 0


def _as_closed(space: TerminalSpace, c) -> int:
    bits = c.bits if isinstance(c, ClosedSet) else _bits_of(c)
    if bits not in space.closed_bits:
        raise ValueError(f"{sorted(_indices(bits))} is not closed")
    return bits


def irreducible_closed_analysis(space: TerminalSpace, closed) -> IrreducibilityResult:
    c = _as_closed(space, closed)
    if not c:
        raise EmptyClosedSet("irreducibility is only defined for nonempty closed sets")
    irreducible = True
    closed_list = [d.bits for d in space.closed_sets]
    for d1 in closed_list:
        for d2 in closed_list:
            if c & ~(d1 | d2) == 0 and c & ~d1 and c & ~d2:
                irreducible = False
                break
        if not irreducible:
            break
    ker = space.kernel_bits(c)
    lattice = space.lattice
    kernel_si = lattice.classification(Ideal(space.monoid.order, ker)).strongly_irreducible
    generics = [p for p in range(len(space.points)) if c >> p & 1 and space.up[p] == c]
    generic = None
    if irreducible:
        for p in generics:
            if space.point_bits[p] == ker:
                generic = p
    return IrreducibilityResult(irreducible, kernel_si, generic,
                                irreducible and len(generics) == 1, len(generics))


@dataclass(frozen=True)
class ComponentsResult:
    components: tuple[ClosedSet, ...]
    minimal_si: tuple[int, ...]
    # (minimal point, index into components of its hull)
    bijection: tuple[tuple[int, int], ...]
    is_bijection: bool


def irreducible_components(space: TerminalSpace) -> ComponentsResult:
    irreducible = [c.bits for c in space.closed_sets
                   if c.bits and irreducible_closed_analysis(space, c).irreducible_topological]
    maximal = [c for c in irreducible if not any(d != c and c & ~d == 0 for d in irreducible)]
    components = tuple(sorted((space.closed_from_bits(c) for c in maximal), key=ClosedSet.sort_key))
    pb = space.point_bits
    minimal = tuple(i for i in range(len(pb))
                    if not any(j != i and pb[j] & ~pb[i] == 0 for j in range(len(pb))))
    comp_bits = [c.bits for c in components]
    pairs = []
    for i in minimal:
        h = space.up[i]
        pairs.append((i, comp_bits.index(h) if h in comp_bits else -1))
    targets = [c for _, c in pairs]
    ok = -1 not in targets and sorted(targets) == list(range(len(components)))
    return ComponentsResult(components, minimal, tuple(pairs), ok)


@dataclass(frozen=True)
class InvertibilityResult:
    element: int
    criterion_holds: bool
    is_unit: bool

    @property
    def agree(self) -> bool:
        return self.criterion_holds == self.is_unit


def invertibility_check(space: TerminalSpace, element: int) -> InvertibilityResult:
    m = space.monoid
    if not 0 <= element < m.order:
        raise IndexError(element)
    h = space.hull_bits(principal_ideal(m, element).bits)
    return InvertibilityResult(element, h == 0, element in units(m))


@dataclass(frozen=True)
class NoetherianResult:
    dcc_closed_sets: bool
    longest_chain: int


def noetherian_check(space: TerminalSpace) -> NoetherianResult:
    """Descending chains of closed sets; finitely many closed sets make DCC automatic."""
    closed = [c.bits for c in space.closed_sets]
    longest = {}
    for c in sorted(closed, key=lambda b: bin(b).count("1")):
        below = [longest[d] for d in longest if d != c and d & ~c == 0]
        longest[c] = 1 + max(below, default=0)
    # strict inclusion is irreflexive on a finite family, so no infinite descent
    dcc = all(not (c & ~d == 0 and d & ~c == 0) or c == d for c in closed for d in closed)
    return NoetherianResult(dcc, max(longest.values()))


# -- radicals and density -----------------------------------------------------

@dataclass(frozen=True)
class RadicalTriple:
    """Meets of the maximal, prime and strongly irreducible ideals.

    An empty defining family gives the whole monoid.
    """

    m_radical: Ideal
    p_radical: Ideal
    s_radical: Ideal
    maximal: tuple[Ideal, ...] = ()
    primes: tuple[Ideal, ...] = ()

    def __post_init__(self):
        if not (self.s_radical <= self.p_radical <= self.m_radical):
            raise InvariantViolation("radical chain s <= p <= m fails")


def radicals(m: FiniteMonoid, lattice: IdealLattice, space: TerminalSpace) -> RadicalTriple:
    maximal = lattice.with_flag("maximal")
    primes = lattice.with_flag("prime")
    return RadicalTriple(
        intersection(m, maximal),
        intersection(m, primes),
        intersection(m, space.points),
        maximal,
        primes,
    )


@dataclass(frozen=True)
class DensityResult:
    spec_dense: bool
    max_dense: bool
    p_eq_s: bool
    m_eq_s: bool
    # Spec dense <=> p = s, and Max dense <=> m = s
    corrected_pairing_holds: bool
    # Max dense <=> p = s, and Spec dense <=> m = s
    literal_pairing_holds: bool


def density_check(m: FiniteMonoid, space: TerminalSpace) -> DensityResult:
    rad = radicals(m, space.lattice, space)
    pts = [p.bits for p in space.points]
    try:
        spec_idx = [pts.index(p.bits) for p in rad.primes]
        max_idx = [pts.index(p.bits) for p in rad.maximal]
    except ValueError:
        raise InvariantViolation("a prime or maximal ideal is not strongly irreducible") from None
    if not set(max_idx) <= set(spec_idx):
        raise InvariantViolation("a maximal ideal is not prime")
    spec_dense = space.closure_bits(_bits_of(spec_idx)) == space.all_bits
    max_dense = space.closure_bits(_bits_of(max_idx)) == space.all_bits
    p_eq_s = rad.p_radical == rad.s_radical
    m_eq_s = rad.m_radical == rad.s_radical
    return DensityResult(
        spec_dense, max_dense, p_eq_s, m_eq_s,
        spec_dense == p_eq_s and max_dense == m_eq_s,
        max_dense == p_eq_s and spec_dense == m_eq_s,
    )


__all__ = [
    "SearchConfig", "TerminalSpace", "ClosedSet", "build_terminal_space", "kernel", "hull",
    "hk_closure", "enumerate_closed_sets", "topological_closure", "verify_kuratowski",
    "closure_class_check", "separation_check", "open_sets", "compactness_witness",
    "irreducible_closed_analysis", "irreducible_components", "invertibility_check",
    "noetherian_check", "radicals", "density_check",
]
