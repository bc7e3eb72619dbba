"""Named monoid families and a census of small commutative monoids."""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .monoid import FiniteMonoid, OrderTooLarge, _element_invariants, default_names, is_isomorphic

FAMILIES = ("z_mult", "cyclic", "boolean", "chain_semilattice", "direct_product")
MAX_FAMILY_ORDER = 64
CENSUS_CAP = 5


@dataclass(frozen=True)
class FamilySpec:
    """A family id with its integer parameters (or factor specs for products).

    ``z_mult(n)``, ``cyclic(index, period)``, ``boolean``,
    ``chain_semilattice(k)``, ``direct_product(spec, spec)``.
    """

    family: str
    params: tuple[int, ...] = ()
    factors: tuple["FamilySpec", ...] = ()

    def __str__(self):
        if self.family == "boolean":
            return "boolean"
        if self.family == "direct_product":
            return f"direct_product({','.join(map(str, self.factors))})"
        return f"{self.family}({','.join(map(str, self.params))})"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        spec, rest = _parse_spec(text.replace(" ", ""), 0)
        if rest != len(text.replace(" ", "")):
            raise ValueError(f"trailing input in family spec {text!r}")
        return spec


def _parse_spec(s: str, pos: int) -> tuple[FamilySpec, int]:
    m = re.compile(r"[a-z_]+").match(s, pos)
    if not m:
        raise ValueError(f"expected a family name at position {pos} of {s!r}")
    name, pos = m.group(), m.end()
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    args = []
    if pos < len(s) and s[pos] == "(":
        pos += 1
        while True:
            if name == "direct_product":
                sub, pos = _parse_spec(s, pos)
                args.append(sub)
            else:
                num = re.compile(r"-?\d+").match(s, pos)
                if not num:
                    raise ValueError(f"expected an integer at position {pos} of {s!r}")
                args.append(int(num.group()))
                pos = num.end()
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == ")":
                pos += 1
                break
            raise ValueError(f"unbalanced parentheses in {s!r}")
    if name == "direct_product":
        return FamilySpec(name, (), tuple(args)), pos
    return FamilySpec(name, tuple(args)), pos


def _expect(spec: FamilySpec, count: int):
    if len(spec.params) != count:
        raise ValueError(f"{spec.family} takes {count} integer parameter(s), got {len(spec.params)}")


def z_mult(n: int) -> FiniteMonoid:
    if n < 1:
        raise ValueError("z_mult needs n >= 1")
    table = [[a * b % n for b in range(n)] for a in range(n)]
    return FiniteMonoid.from_table(table, identity=1 % n, names=[str(i) for i in range(n)])


def cyclic(index: int, period: int) -> FiniteMonoid:
    """``<a | a^(index+period) = a^index>`` on 1, a, ..., a^(index+period-1)."""
    if index < 1 or period < 1:
        raise ValueError("cyclic needs index >= 1 and period >= 1")
    n = index + period

    def reduce(e):
        return e if e < index else index + (e - index) % period

    table = [[reduce(i + j) for j in range(n)] for i in range(n)]
    names = ["1", "a"] + [f"a{e}" for e in range(2, n)]
    return FiniteMonoid.from_table(table, identity=0, names=names)


def chain_semilattice(k: int) -> FiniteMonoid:
    """``0 < 1 < ... < k-1`` under min; the top ``k-1`` is the identity."""
    if k < 1:
        raise ValueError("chain_semilattice needs k >= 1")
    table = [[min(a, b) for b in range(k)] for a in range(k)]
    return FiniteMonoid.from_table(table, identity=k - 1, names=[str(i) for i in range(k)])


def direct_product(m1: FiniteMonoid, m2: FiniteMonoid) -> FiniteMonoid:
    n1, n2 = m1.order, m2.order
    table = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for a2 in range(n2):
            for b1 in range(n1):
                for b2 in range(n2):
                    table[a1 * n2 + a2][b1 * n2 + b2] = m1.table[a1][b1] * n2 + m2.table[a2][b2]
    names = [f"{x}_{y}" for x in m1.element_names for y in m2.element_names]
    return FiniteMonoid.from_table(table, identity=m1.identity * n2 + m2.identity, names=names)


def make_family(spec: FamilySpec | str) -> FiniteMonoid:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    fam = spec.family
    if fam == "z_mult":
        _expect(spec, 1)
        order = spec.params[0]
    elif fam == "cyclic":
        _expect(spec, 2)
        order = sum(spec.params)
    elif fam == "boolean":
        _expect(spec, 0)
        order = 2
    elif fam == "chain_semilattice":
        _expect(spec, 1)
        order = spec.params[0]
    elif fam == "direct_product":
        if len(spec.factors) < 2:
            raise ValueError("direct_product needs at least two factors")
        factors = [make_family(f) for f in spec.factors]
        order = 1
        for f in factors:
            order *= f.order
    else:
        raise ValueError(f"unknown family {fam!r}")
    if order > MAX_FAMILY_ORDER:
        raise ValueError(f"{spec} has order {order}, above the cap {MAX_FAMILY_ORDER}")

    if fam == "z_mult":
        return z_mult(spec.params[0])
    if fam == "cyclic":
        return cyclic(*spec.params)
    if fam == "boolean":
        return z_mult(2)
    if fam == "chain_semilattice":
        return chain_semilattice(spec.params[0])
    out = factors[0]
    for f in factors[1:]:
        out = direct_product(out, f)
    return out


def _commutative_tables(n: int):
    """Yield every commutative monoid table on 0..n-1 with identity 0.

    Cells above the diagonal (excluding the identity row) are filled in
    row-major order, so tables come out in lexicographic order of their
    flattened form. Associativity is checked on every triple whose products
    are already defined.
    """
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = x
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    rest = range(1, n)

    def associative_so_far():
        for x in rest:
            tx = t[x]
            for y in rest:
                xy = tx[y]
                if xy < 0:
                    continue
                ty = t[y]
                txy = t[xy]
                for z in rest:
                    yz = ty[z]
                    if yz < 0:
                        continue
                    left, right = txy[z], tx[yz]
                    if left >= 0 and right >= 0 and left != right:
                        return False
        return True

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        a, b = cells[k]
        for v in range(n):
            t[a][b] = t[b][a] = v
            if associative_so_far():
                yield from fill(k + 1)
        t[a][b] = t[b][a] = -1

    yield from fill(0)


def enumerate_commutative_monoids(n: int, up_to_iso: bool = True, *,
                                  allow_order_6: bool = False) -> list[FiniteMonoid]:
    """All commutative monoids of order ``n`` with identity at index 0.

    With ``up_to_iso`` only the lexicographically least table of each
    isomorphism class is kept.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > CENSUS_CAP:
        if n == 6 and allow_order_6:
            warnings.warn("order-6 census is slow", RuntimeWarning, stacklevel=2)
        else:
            raise OrderTooLarge(f"census is capped at order {CENSUS_CAP} (6 with override)")
    names = default_names(n, 0)
    out: list[FiniteMonoid] = []
    buckets: dict[tuple, list[FiniteMonoid]] = {}
    for table in _commutative_tables(n):
        m = FiniteMonoid(n, tuple(names), table, 0)
        if up_to_iso:
            key = tuple(sorted(_element_invariants(m)))
            bucket = buckets.setdefault(key, [])
            if any(is_isomorphic(m, rep) is not None for rep in bucket):
                continue
            bucket.append(m)
        out.append(m)
    out.sort(key=FiniteMonoid.flat_table)
    return out
