"""Ideals of a finite commutative monoid and the lattice they form.

An ideal is a nonempty subset closed under multiplication by the whole
monoid. Every ideal is the union of the principal ideals ``aM`` of its
members, so the lattice is generated from the ``n`` principal ideals by
unions. Meet is intersection and join is union.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .monoid import ElementSet, FiniteMonoid, InvariantViolation, power_sequence


class Ideal(ElementSet):
    """An ElementSet known to be an ideal of its monoid.

    Instances come from the functions of this module; constructing one by
    hand skips the closure check.
    """


class EmptyGeneratorSet(ValueError):
    pass


class IdealNotInLattice(KeyError):
    pass


def is_ideal(m: FiniteMonoid, s: ElementSet) -> tuple[bool, tuple | None]:
    """Whether ``s`` is an ideal, with a witness when it is not.

    The witness is ``(i, x)`` with ``i`` in ``s`` and ``i*x`` outside it, or
    ``("empty",)`` for the empty set. Multipliers from ``s`` itself are tried
    first.
    """
    if s.order != m.order:
        raise ValueError("set belongs to a different monoid")
    if not s:
        return False, ("empty",)
    multipliers = list(s) + list(s.complement())
    for i in s:
        row = m.table[i]
        for x in multipliers:
            if not s.bits >> row[x] & 1:
                return False, (i, x)
    return True, None


def _closure_bits(m: FiniteMonoid, bits: int) -> int:
    out, i = 0, 0
    while bits:
        if bits & 1:
            out |= m.principal_bits[i]
        bits >>= 1
        i += 1
    return out


def generated_ideal(m: FiniteMonoid, s: ElementSet) -> Ideal:
    """The ideal ``SM``; with the identity present it is the least ideal containing ``S``."""
    if s.order != m.order:
        raise ValueError("set belongs to a different monoid")
    if not s:
        raise EmptyGeneratorSet("cannot generate an ideal from the empty set")
    return Ideal(m.order, _closure_bits(m, s.bits))


def principal_ideal(m: FiniteMonoid, a: int) -> Ideal:
    return Ideal(m.order, m.principal_bits[a])


def whole(m: FiniteMonoid) -> Ideal:
    return Ideal(m.order, m.full_bits)


def product_ideal(m: FiniteMonoid, i: Ideal, j: Ideal) -> Ideal:
    bits = 0
    jm = j.members()
    for a in i:
        row = m.table[a]
        for b in jm:
            bits |= 1 << row[b]
    out = Ideal(m.order, bits)
    ok, wit = is_ideal(m, out)
    if not ok:
        raise InvariantViolation(f"product IJ is not an ideal: {wit}")
    if not out <= (i & j):
        raise InvariantViolation("IJ is not contained in the intersection of I and J")
    return out


def radical(m: FiniteMonoid, i: ElementSet) -> Ideal:
    """Elements some positive power of which lies in ``i``."""
    bits = 0
    for x in range(m.order):
        seq, _ = power_sequence(m, x)
        # the power sequence is eventually periodic, so seq covers every power
        if any(i.bits >> p & 1 for p in seq):
            bits |= 1 << x
    out = Ideal(m.order, bits)
    ok, wit = is_ideal(m, out)
    if not ok:
        raise InvariantViolation(f"radical is not an ideal: {wit}")
    return out


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of one monoid, ordered by (cardinality, members)."""

    monoid: FiniteMonoid
    ideals: tuple[Ideal, ...]
    # leq[a] is a bitmask over ideal positions b with ideals[a] <= ideals[b]
    leq: tuple[int, ...] = field(repr=False)

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __getitem__(self, k) -> Ideal:
        return self.ideals[k]

    @cached_property
    def _position(self) -> dict[int, int]:
        return {I.bits: k for k, I in enumerate(self.ideals)}

    def position(self, s: ElementSet) -> int:
        try:
            return self._position[s.bits]
        except KeyError:
            raise IdealNotInLattice(repr(s)) from None

    def __contains__(self, s) -> bool:
        return isinstance(s, ElementSet) and s.order == self.monoid.order and s.bits in self._position

    def included(self, a: int, b: int) -> bool:
        return bool(self.leq[a] >> b & 1)

    def meet(self, a: Ideal, b: Ideal) -> Ideal:
        return Ideal(a.order, a.bits & b.bits)

    def join(self, a: Ideal, b: Ideal) -> Ideal:
        return Ideal(a.order, a.bits | b.bits)

    @property
    def top(self) -> Ideal:
        return self.ideals[-1]

    @property
    def bottom(self) -> Ideal:
        return self.ideals[0]

    @cached_property
    def proper(self) -> tuple[Ideal, ...]:
        return self.ideals[:-1]

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs ``(a, b)`` with ideals[a] < ideals[b] and nothing between."""
        edges = []
        n = len(self.ideals)
        for a in range(n):
            ups = [b for b in range(n) if b != a and self.included(a, b)]
            for b in ups:
                if not any(c != b and self.included(c, b) for c in ups):
                    edges.append((a, b))
        return edges

    @cached_property
    def classifications(self) -> tuple["IdealClassification", ...]:
        return tuple(classify_ideal(self.monoid, I, self) for I in self.ideals)

    def classification(self, s: ElementSet) -> "IdealClassification":
        return self.classifications[self.position(s)]

    def with_flag(self, flag: str) -> tuple[Ideal, ...]:
        return tuple(I for I, c in zip(self.ideals, self.classifications) if getattr(c, flag))


def enumerate_ideals(m: FiniteMonoid) -> IdealLattice:
    principals = sorted(set(m.principal_bits))
    found = set(principals)
    frontier = list(principals)
    while frontier:
        nxt = []
        for u in frontier:
            for p in principals:
                v = u | p
                if v not in found:
                    found.add(v)
                    nxt.append(v)
        frontier = nxt
    for a in found:
        for b in found:
            if a & b not in found:
                raise InvariantViolation("ideals are not closed under intersection")
    ideals = sorted((Ideal(m.order, b) for b in found), key=Ideal.sort_key)
    if ideals[-1].bits != m.full_bits:
        raise InvariantViolation("the whole monoid is missing from the lattice")
    if any(ideals[0].bits & ~I.bits for I in ideals):
        raise InvariantViolation("no least ideal")
    leq = tuple(
        sum(1 << b for b, J in enumerate(ideals) if I.bits & ~J.bits == 0)
        for I in ideals
    )
    return IdealLattice(m, tuple(ideals), leq)


@dataclass(frozen=True)
class IdealClassification:
    ideal: Ideal
    proper: bool
    prime: bool
    maximal: bool
    irreducible: bool
    strongly_irreducible: bool
    semiprime: bool
    # flag name -> counterexample for every flag that is False
    witnesses: dict = field(default_factory=dict, compare=False)

    FLAGS = ("proper", "prime", "maximal", "irreducible", "strongly_irreducible", "semiprime")

    def flags(self) -> dict[str, bool]:
        return {f: getattr(self, f) for f in self.FLAGS}


def classify_ideal(m: FiniteMonoid, ideal: ElementSet, lattice: IdealLattice) -> IdealClassification:
    k = lattice.position(ideal)
    I = lattice.ideals[k]
    bits = I.bits
    if bits == m.full_bits:
        wit = {f: "not proper" for f in IdealClassification.FLAGS}
        return IdealClassification(I, False, False, False, False, False, False, wit)

    wit = {}
    prime = True
    for a in range(m.order):
        if bits >> a & 1:
            continue
        row = m.table[a]
        for b in range(a, m.order):
            if not bits >> b & 1 and bits >> row[b] & 1:
                prime = False
                wit["prime"] = (a, b)
                break
        if not prime:
            break

    proper_pos = [j for j in range(len(lattice)) if lattice.ideals[j].bits != m.full_bits]
    maximal = True
    for j in proper_pos:
        if j != k and lattice.included(k, j):
            maximal = False
            wit["maximal"] = lattice.ideals[j]
            break

    irreducible = strongly = True
    ideals = lattice.ideals
    n = len(ideals)
    for a in range(n):
        A = ideals[a].bits
        for b in range(a, n):
            B = ideals[b].bits
            meet = A & B
            if irreducible and meet == bits and A != bits and B != bits:
                irreducible = False
                wit["irreducible"] = (ideals[a], ideals[b])
            if strongly and meet & ~bits == 0 and A & ~bits and B & ~bits:
                strongly = False
                wit["strongly_irreducible"] = (ideals[a], ideals[b])
        if not (irreducible or strongly):
            break

    rad = radical(m, I)
    semiprime = rad.bits == bits
    if not semiprime:
        wit["semiprime"] = next(iter(rad - I))
    return IdealClassification(I, True, prime, maximal, irreducible, strongly, semiprime, wit)


@dataclass(frozen=True)
class DistributivityResult:
    is_distributive: bool
    counterexample: tuple[Ideal, Ideal, Ideal] | None = None


def lattice_analysis(lattice: IdealLattice) -> DistributivityResult:
    """Check ``A & (B | C) == (A & B) | (A & C)`` over all ordered triples."""
    ideals = lattice.ideals
    for A in ideals:
        for B in ideals:
            for C in ideals:
                if A.bits & (B.bits | C.bits) != (A.bits & B.bits) | (A.bits & C.bits):
                    return DistributivityResult(False, (A, B, C))
    return DistributivityResult(True)


def intersection(m: FiniteMonoid, family: Iterable[ElementSet]) -> Ideal:
    """Intersection of a family of ideals; the empty family gives ``M``."""
    bits = m.full_bits
    for I in family:
        bits &= I.bits
    return Ideal(m.order, bits)


@dataclass(frozen=True)
class ArithmeticResult:
    side_a: bool
    side_b: bool
    agree: bool
    witness: Ideal | None = None


def arithmetic_check(m: FiniteMonoid, lattice: IdealLattice) -> ArithmeticResult:
    """Distributivity versus "every ideal is the meet of the strongly irreducible ideals above it"."""
    side_a = lattice_analysis(lattice).is_distributive
    si = lattice.with_flag("strongly_irreducible")
    witness = None
    for I in lattice.ideals:
        hull_meet = intersection(m, (J for J in si if I <= J))
        if hull_meet.bits != I.bits:
            witness = I
            break
    side_b = witness is None
    return ArithmeticResult(side_a, side_b, side_a == side_b, witness)
