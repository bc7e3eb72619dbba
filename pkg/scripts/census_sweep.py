"""Run the full verifier over the census and tabulate statuses and findings.

    python3 scripts/census_sweep.py --max-order 5
    python3 scripts/census_sweep.py --max-order 4 --json sweep.json
"""
import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from termspace.corpus import enumerate_commutative_monoids
from termspace.topology import SearchConfig
from termspace.verifier import CHECK_IDS, STATUSES, run_all


@dataclass
class SweepConfig:
    max_order: int = 4
    max_points: int = 20
    sample: bool = False
    seed: int = 0


def sweep(cfg: SweepConfig) -> dict:
    search = SearchConfig(max_points=cfg.max_points, sample=cfg.sample, seed=cfg.seed)
    by_check = {cid: Counter() for cid in CHECK_IDS}
    findings = Counter()
    failures = []
    per_order = {}
    for n in range(1, cfg.max_order + 1):
        t0 = time.perf_counter()
        ms = enumerate_commutative_monoids(n)
        points = Counter()
        for k, m in enumerate(ms):
            rep = run_all(m, name=f"census {n}.{k}", config=search)
            for c in rep.checks:
                by_check[c.id][c.status] += 1
                if c.status == "fail":
                    failures.append({"monoid": rep.name, "check": c.id, "witness": c.payload.get("witness")})
            findings.update(rep.findings)
            points[rep.check("separation.t0").payload["points"]] += 1
        per_order[n] = {"monoids": len(ms), "seconds": round(time.perf_counter() - t0, 3),
                        "points_histogram": dict(sorted(points.items()))}
    return {
        "config": asdict(cfg),
        "per_order": per_order,
        "checks": {cid: dict(cnt) for cid, cnt in by_check.items()},
        "findings": dict(findings.most_common()),
        "failures": failures,
    }


def print_summary(result: dict):
    for n, row in result["per_order"].items():
        print(f"order {n}: {row['monoids']} monoids in {row['seconds']}s, "
              f"points histogram {row['points_histogram']}")
    print()
    print(f"{'check':<44}" + "".join(f"{s:>12}" for s in STATUSES))
    for cid, cnt in result["checks"].items():
        print(f"{cid:<44}" + "".join(f"{cnt.get(s, 0):>12}" for s in STATUSES))
    print()
    total = sum(row["monoids"] for row in result["per_order"].values())
    for f, k in result["findings"].items():
        print(f"{k:>4}/{total}  {f}")
    print(f"\n{len(result['failures'])} failing checks")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--max-points", type=int, default=20)
    p.add_argument("--sample", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="FILE", help="also write the full result as JSON")
    args = p.parse_args()
    cfg = SweepConfig(args.max_order, args.max_points, args.sample, args.seed)
    result = sweep(cfg)
    print_summary(result)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(result, fh, indent=2)
            fh.write("\n")
    return 1 if result["failures"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
