"""Closure, associativity and offset patterns of insertion on small B(n,d).

Besides the disjoint-team pattern (k0 + 2d + k1 <= n), which should always
commute, this also probes overlapping teams (the second team starting inside
the first) and reports how often that identity breaks.

    python3 scripts/insertion_sweep.py --d 2 --max-n 4
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from itertools import product

from bruhat_operads import enumerate_bruhat, insert, ziegler_check
from bruhat_operads.insertion import check_insertion_laws


@dataclass
class Config:
    d: int = 1
    max_n: int = 3
    max_inner: int | None = None


def closure(cfg: Config) -> tuple[int, int]:
    checked = bad = 0
    inner_max = cfg.max_inner or cfg.max_n
    for n in range(cfg.d, cfg.max_n + 1):
        for m in range(cfg.d, inner_max + 1):
            for b, b2 in product(enumerate_bruhat(n, cfg.d), enumerate_bruhat(m, cfg.d)):
                for j in range(n - cfg.d + 1):
                    checked += 1
                    bad += bool(ziegler_check(insert(b, b2, j, validate=False)))
    return checked, bad


def overlapping(cfg: Config) -> tuple[int, int]:
    """(a o_k0 b) o_{k0+m+s-d} c versus (a o_{k0+s} c) o_k0 b for 0 < s < d."""
    d = cfg.d
    checked = bad = 0
    n = cfg.max_n
    outer = enumerate_bruhat(n, d)
    inner = enumerate_bruhat(d + 1, d) if d + 1 <= n else []
    for a, b, c in product(outer, inner, inner):
        m = b.n
        for k0, s in product(range(n), range(1, d)):
            if k0 + s + d > n:
                continue
            checked += 1
            try:
                lhs = insert(insert(a, b, k0), c, k0 + m + s - d)
                rhs = insert(insert(a, c, k0 + s), b, k0)
                bad += lhs != rhs
            except ValueError:
                bad += 1
    return checked, bad


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=Config.d)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-inner", type=int, default=None)
    args = ap.parse_args()
    cfg = Config(args.d, args.max_n, args.max_inner)

    checked, bad = closure(cfg)
    print(f"closure d={cfg.d}: {checked} insertions, {bad} outside B")

    els = [e for n in range(cfg.d, cfg.max_n + 1) for e in enumerate_bruhat(n, cfg.d)]
    small = [e for e in els if e.n <= cfg.d + 1]
    report = check_insertion_laws(product(els, small, small))
    print(report)
    for line in report.failures[:5]:
        print("  ", line)

    if cfg.d > 1:
        checked, bad = overlapping(cfg)
        print(f"overlapping teams d={cfg.d}, n={cfg.max_n}: {bad}/{checked} offset choices do not commute")


if __name__ == "__main__":
    main()
