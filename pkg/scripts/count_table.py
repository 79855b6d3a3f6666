"""Table of |B(n,d)| with enumeration times and an admissible-order cross-check.

    python3 scripts/count_table.py --max-n 7 --oracle-max-n 5
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from bruhat_operads import BudgetExceeded, enumerate_admissible_classes, enumerate_bruhat


@dataclass
class Config:
    max_n: int = 7
    oracle_max_n: int = 5
    budget: int = 10**7


def run(cfg: Config) -> list[dict]:
    rows = []
    for n in range(1, cfg.max_n + 1):
        for d in range(1, n + 1):
            start = time.perf_counter()
            try:
                fast = enumerate_bruhat(n, d, cfg.budget)
            except BudgetExceeded:
                rows.append({"n": n, "d": d, "count": None, "seconds": None, "oracle": "budget"})
                continue
            row = {"n": n, "d": d, "count": len(fast), "seconds": time.perf_counter() - start, "oracle": "-"}
            if n <= cfg.oracle_max_n:
                slow = {e.members for e in enumerate_admissible_classes(n, d, cfg.budget)}
                row["oracle"] = "agree" if slow == {e.members for e in fast} else "DISAGREE"
            rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--oracle-max-n", type=int, default=Config.oracle_max_n)
    ap.add_argument("--budget", type=int, default=Config.budget)
    args = ap.parse_args()
    cfg = Config(args.max_n, args.oracle_max_n, args.budget)
    print(f"{'n':>3} {'d':>3} {'|B(n,d)|':>10} {'seconds':>9}  oracle")
    for r in run(cfg):
        count = "?" if r["count"] is None else r["count"]
        secs = "-" if r["seconds"] is None else f"{r['seconds']:.3f}"
        print(f"{r['n']:>3} {r['d']:>3} {count:>10} {secs:>9}  {r['oracle']}")


if __name__ == "__main__":
    main()
