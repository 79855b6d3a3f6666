"""Operad law and monotonicity sweep over the standard instances.

    python3 scripts/law_sweep.py               # exhaustive (a few minutes)
    python3 scripts/law_sweep.py --limit 5000  # sampled triples per operad
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass

from bruhat_operads.operads import monotone_compose_check, standard_instances, verify_operad_laws


@dataclass
class Config:
    limit: int | None = None
    gamma_samples: int = 200
    seed: int = 0
    json_out: str | None = None


def run(cfg: Config) -> list[dict]:
    results = []
    for op, domain in standard_instances():
        start = time.perf_counter()
        laws = verify_operad_laws(op, domain, limit=cfg.limit, gamma_samples=cfg.gamma_samples, seed=cfg.seed)
        try:
            mono = monotone_compose_check(op, domain, gamma_samples=cfg.gamma_samples, seed=cfg.seed)
        except NotImplementedError:  # molecules carry no order
            mono = None
        results.append({"operad": op.name, "domain": len(domain), "laws": laws.to_json(),
                        "monotone": mono and mono.to_json(), "seconds": round(time.perf_counter() - start, 2)})
        print(f"{op.name:>8}  |dom|={len(domain):<5} {laws}  |  {mono or 'unordered'}  "
              f"({results[-1]['seconds']}s)", flush=True)
    return results


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=None, help="random triples per operad (default: all)")
    ap.add_argument("--gamma-samples", type=int, default=Config.gamma_samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--json-out")
    args = ap.parse_args()
    results = run(Config(args.limit, args.gamma_samples, args.seed, args.json_out))
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(results, fh, indent=1)


if __name__ == "__main__":
    main()
