"""Finite commutative monoids given by Cayley tables.

Elements are the dense indices ``0..n-1``; names only matter for I/O.
Subsets of a monoid are :class:`ElementSet` values backed by an integer
bitmask, so unions, intersections and inclusion tests are single integer
operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class MonoidError(ValueError):
    """Base class for rejected monoid tables."""

    witness: tuple = ()


class ShapeError(MonoidError):
    pass


class DuplicateName(MonoidError):
    def __init__(self, name: str):
        super().__init__(f"duplicate element name {name!r}")
        self.name = name
        self.witness = (name,)


class UnknownIdentityName(MonoidError):
    def __init__(self, name: str):
        super().__init__(f"identity {name!r} is not an element name")
        self.name = name
        self.witness = (name,)


class OutOfRangeEntry(MonoidError):
    def __init__(self, a: int, b: int, value):
        super().__init__(f"table[{a}][{b}] = {value!r} is not an element index")
        self.witness = (a, b, value)


class NotCommutative(MonoidError):
    def __init__(self, a: int, b: int):
        super().__init__(f"{a}*{b} != {b}*{a}")
        self.witness = (a, b)


class IdentityLawFails(MonoidError):
    def __init__(self, a: int):
        super().__init__(f"identity*{a} != {a}")
        self.witness = (a,)


class NotAssociative(MonoidError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"({a}*{b})*{c} != {a}*({b}*{c})")
        self.witness = (a, b, c)


class MismatchedMonoid(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A proof obligation that should hold for every valid monoid did not."""


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of the elements ``0..order-1`` of one monoid."""

    order: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise ValueError(f"member index out of range for order {self.order}")

    @classmethod
    def of(cls, order: int, members: Iterable[int] = ()):
        bits = 0
        for i in members:
            if not 0 <= i < order:
                raise ValueError(f"member {i} out of range for order {order}")
            bits |= 1 << i
        return cls(order, bits)

    @classmethod
    def full(cls, order: int):
        return cls(order, (1 << order) - 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, i) -> bool:
        return isinstance(i, int) and 0 <= i < self.order and bool(self.bits >> i & 1)

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.order == other.order and self.bits == other.bits

    def __hash__(self):
        return hash((self.order, self.bits))

    def _check(self, other: "ElementSet"):
        if not isinstance(other, ElementSet):
            raise TypeError(f"expected ElementSet, got {type(other).__name__}")
        if other.order != self.order:
            raise MismatchedMonoid(f"orders differ: {self.order} vs {other.order}")

    def _combine(self, other, bits):
        # meets and joins of two ideals are ideals again
        cls = type(self) if type(self) is type(other) else ElementSet
        return cls(self.order, bits)

    def __and__(self, other):
        self._check(other)
        return self._combine(other, self.bits & other.bits)

    def __or__(self, other):
        self._check(other)
        return self._combine(other, self.bits | other.bits)

    def __sub__(self, other):
        self._check(other)
        return ElementSet(self.order, self.bits & ~other.bits)

    def __le__(self, other):
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    # written out rather than delegated: for a subclass on the right Python tries
    # the reflected method first, and delegating back would recurse
    def __ge__(self, other):
        self._check(other)
        return other.bits & ~self.bits == 0

    def __gt__(self, other):
        return self >= other and self.bits != other.bits

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def complement(self) -> "ElementSet":
        return ElementSet(self.order, ((1 << self.order) - 1) & ~self.bits)

    def sort_key(self):
        """Cardinality first, then lexicographic member order."""
        return (len(self), self.members())

    def __repr__(self):
        return f"{type(self).__name__}({{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class FiniteMonoid:
    """A validated finite commutative monoid.

    Construction runs the full O(n^3) axiom check, so an instance that
    exists is always a commutative monoid.
    """

    order: int
    element_names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int

    def __post_init__(self):
        _check_axioms(self.order, self.element_names, self.table, self.identity)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], identity: int = 0,
                   names: Sequence[str] | None = None) -> "FiniteMonoid":
        n = len(table)
        if names is None:
            names = default_names(n, identity)
        return cls(n, tuple(names), tuple(tuple(row) for row in table), identity)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def name(self, a: int) -> str:
        return self.element_names[a]

    def index(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise KeyError(name) from None

    @cached_property
    def principal_bits(self) -> tuple[int, ...]:
        """Bitmask of the principal ideal ``aM`` for every element ``a``."""
        out = []
        for row in self.table:
            bits = 0
            for v in row:
                bits |= 1 << v
            out.append(bits)
        return tuple(out)

    @cached_property
    def full_bits(self) -> int:
        return (1 << self.order) - 1

    def full(self) -> ElementSet:
        return ElementSet(self.order, self.full_bits)

    def subset(self, members: Iterable[int]) -> ElementSet:
        return ElementSet.of(self.order, members)

    def flat_table(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)


def default_names(n: int, identity: int = 0) -> list[str]:
    """``1`` for the identity, then ``a``, ``b``, ... for the rest."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    names, k = [], 0
    for i in range(n):
        if i == identity:
            names.append("1")
        else:
            names.append(letters[k] if k < 26 else f"x{k}")
            k += 1
    return names


def _check_axioms(n, names, table, identity):
    if n < 1:
        raise ShapeError("a monoid needs at least one element")
    if len(names) != n:
        raise ShapeError(f"{len(names)} names for order {n}")
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateName(name)
        seen.add(name)
    if len(table) != n or any(len(row) != n for row in table):
        raise ShapeError(f"table is not {n}x{n}")
    if not (isinstance(identity, int) and 0 <= identity < n):
        raise ShapeError(f"identity index {identity!r} out of range")
    for a, row in enumerate(table):
        for b, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise OutOfRangeEntry(a, b, v)
    for a in range(n):
        for b in range(a + 1, n):
            if table[a][b] != table[b][a]:
                raise NotCommutative(a, b)
    for a in range(n):
        if table[identity][a] != a:
            raise IdentityLawFails(a)
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rab, rb = table[ab], table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NotAssociative(a, b, c)


def validate_monoid(names: Sequence[str], table: Sequence[Sequence[int]],
                    identity: str) -> FiniteMonoid:
    """Build a monoid from element names, an index table and the identity's name.

    Raises the first failing axiom as a :class:`MonoidError` subclass carrying
    a ``witness`` tuple.
    """
    names = tuple(names)
    if not names:
        raise ShapeError("names must be nonempty")
    if len(set(names)) != len(names):
        seen = set()
        for name in names:
            if name in seen:
                raise DuplicateName(name)
            seen.add(name)
    if identity not in names:
        raise UnknownIdentityName(identity)
    return FiniteMonoid(len(names), names, tuple(tuple(row) for row in table),
                        names.index(identity))


def _check_index(m: FiniteMonoid, a):
    if not (isinstance(a, int) and 0 <= a < m.order):
        raise IndexError(f"element index {a!r} out of range for order {m.order}")


def evaluate(m: FiniteMonoid, a: int, b: int) -> int:
    _check_index(m, a)
    _check_index(m, b)
    return m.table[a][b]


def power_sequence(m: FiniteMonoid, a: int) -> tuple[list[int], int]:
    """Powers ``a^1, a^2, ...`` up to the first repeat.

    Returns ``(seq, start)`` where ``seq[k-1] = a^k`` and the sequence is
    periodic from position ``start`` on (so the index of ``a`` is
    ``start + 1`` and its period is ``len(seq) - start``).
    """
    seq, pos = [a], {a: 0}
    while True:
        nxt = m.table[seq[-1]][a]
        if nxt in pos:
            return seq, pos[nxt]
        pos[nxt] = len(seq)
        seq.append(nxt)


def power(m: FiniteMonoid, a: int, k: int) -> int:
    _check_index(m, a)
    if k < 1:
        raise ValueError("exponent must be positive")
    seq, start = power_sequence(m, a)
    if k <= len(seq):
        return seq[k - 1]
    period = len(seq) - start
    return seq[start + (k - 1 - start) % period]


def units(m: FiniteMonoid) -> ElementSet:
    return m.subset(a for a in range(m.order) if m.identity in m.table[a])


def nonunits(m: FiniteMonoid) -> ElementSet:
    return units(m).complement()


def set_product(m: FiniteMonoid, s: ElementSet, t: ElementSet) -> ElementSet:
    for x in (s, t):
        if x.order != m.order:
            raise MismatchedMonoid(f"set of order {x.order} used with monoid of order {m.order}")
    bits = 0
    tm = t.members()
    for a in s:
        row = m.table[a]
        for b in tm:
            bits |= 1 << row[b]
    return ElementSet(m.order, bits)


def _element_invariants(m: FiniteMonoid) -> list[tuple]:
    u = units(m)
    out = []
    for a in range(m.order):
        seq, start = power_sequence(m, a)
        out.append((a == m.identity, a in u, m.table[a][a] == a,
                    start + 1, len(seq) - start, len(ElementSet(m.order, m.principal_bits[a]))))
    return out


class OrderTooLarge(ValueError):
    pass


def is_isomorphic(m1: FiniteMonoid, m2: FiniteMonoid, *,
                  max_order: int = 6) -> tuple[int, ...] | None:
    """Lexicographically least isomorphism ``m1 -> m2`` as an index map, or None.

    Plain backtracking with the identity pinned and candidates pruned by
    per-element invariants (unit, idempotent, index/period of powers,
    size of the principal ideal).
    """
    if m1.order != m2.order:
        return None
    n = m1.order
    if n > max_order:
        raise OrderTooLarge(f"isomorphism search capped at order {max_order}")
    inv1, inv2 = _element_invariants(m1), _element_invariants(m2)
    if sorted(inv1) != sorted(inv2):
        return None
    t1, t2 = m1.table, m2.table
    cands = [[b for b in range(n) if inv2[b] == inv1[a]] for a in range(n)]
    perm = [-1] * n
    back = [-1] * n

    def consistent(x):
        px = perm[x]
        for y in range(n):
            py = perm[y]
            if py < 0:
                continue
            z, w = t1[x][y], t2[px][py]
            if perm[z] >= 0:
                if perm[z] != w:
                    return False
            elif back[w] >= 0:
                return False
        return True

    def search(x):
        if x == n:
            return True
        for b in cands[x]:
            if back[b] >= 0:
                continue
            perm[x], back[b] = b, x
            if consistent(x) and search(x + 1):
                return True
            perm[x], back[b] = -1, -1
        return False

    if m2.identity not in cands[m1.identity]:
        return None
    if not search(0):
        return None
    return tuple(perm)


def permute(m: FiniteMonoid, perm: Sequence[int]) -> FiniteMonoid:
    """Relabel ``m`` so that old element ``a`` becomes index ``perm[a]``."""
    n = m.order
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
    table = [[0] * n for _ in range(n)]
    names = [""] * n
    for a in range(n):
        names[perm[a]] = m.element_names[a]
        for b in range(n):
            table[perm[a]][perm[b]] = perm[m.table[a][b]]
    return FiniteMonoid(n, tuple(names), tuple(map(tuple, table)), perm[m.identity])
