"""Compare the restricted hull-kernel operator on a class F of ideals with absorption.

For every census monoid, families F of proper ideals are drawn (or, with
--exhaustive, every nonempty F is visited). Three verdicts are recorded:

  direct      the operator X -> {J in F : J >= K(X)} satisfies the closure axioms
  absorption  A & B <= I implies A <= I or B <= I, for all ideals A, B and I in F
  restricted  the same implication with A, B ranging over kernels K(X), X within F

    python3 scripts/closure_class_probe.py --max-order 4 --exhaustive
"""
import argparse
import random
from dataclasses import dataclass

from termspace.corpus import enumerate_commutative_monoids
from termspace.ideals import enumerate_ideals
from termspace.topology import closure_class_check


@dataclass
class ProbeConfig:
    max_order: int = 4
    per_monoid: int = 20
    seed: int = 0
    exhaustive: bool = False
    show: int = 3


def restricted_absorption(fam_bits: list[int]) -> bool:
    kernels = set(fam_bits)
    frontier = list(kernels)
    while frontier:
        nxt = []
        for a in frontier:
            for b in fam_bits:
                if a & b not in kernels:
                    kernels.add(a & b)
                    nxt.append(a & b)
        frontier = nxt
    return all(a & ~i == 0 or b & ~i == 0
               for i in fam_bits for a in kernels for b in kernels if a & b & ~i == 0)


def families(proper, cfg: ProbeConfig, rng: random.Random):
    k = len(proper)
    if not k:
        return
    masks = range(1, 1 << k) if cfg.exhaustive else (rng.randrange(1, 1 << k) for _ in range(cfg.per_monoid))
    for mask in masks:
        yield [I for j, I in enumerate(proper) if mask >> j & 1]


def probe(cfg: ProbeConfig):
    rng = random.Random(cfg.seed)
    rows = []
    for n in range(1, cfg.max_order + 1):
        total = disagree = restricted_disagree = direct_true = 0
        examples = []
        for m in enumerate_commutative_monoids(n):
            lat = enumerate_ideals(m)
            for fam in families(lat.proper, cfg, rng):
                res = closure_class_check(m, lat, fam)
                total += 1
                direct_true += res.direct_kuratowski
                if not res.agree:
                    disagree += 1
                    if len(examples) < cfg.show:
                        examples.append((m, fam, res))
                if restricted_absorption([I.bits for I in fam]) != res.direct_kuratowski:
                    restricted_disagree += 1
        rows.append((n, total, direct_true, disagree, restricted_disagree, examples))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--per-monoid", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="visit every nonempty family")
    p.add_argument("--show", type=int, default=3, help="counterexamples to print per order")
    args = p.parse_args()
    cfg = ProbeConfig(args.max_order, args.per_monoid, args.seed, args.exhaustive, args.show)
    print(f"{'order':>5} {'families':>9} {'direct':>7} {'absorption!=direct':>19} {'restricted!=direct':>19}")
    for n, total, direct_true, disagree, rdis, examples in probe(cfg):
        print(f"{n:>5} {total:>9} {direct_true:>7} {disagree:>19} {rdis:>19}")
        for m, fam, res in examples:
            names = m.element_names
            show = lambda s: "{" + ",".join(names[i] for i in s) + "}"
            a, b, i = res.witness
            print(f"      table {[[names[v] for v in r] for r in m.table]}")
            print(f"      F = {[show(I) for I in fam]}: closure axioms hold, "
                  f"but {show(a)} & {show(b)} <= {show(i)} with neither inside")


if __name__ == "__main__":
    main()
