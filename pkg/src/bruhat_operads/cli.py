"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 search budget exhausted,
3 malformed input.  Errors are reported as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .bruhat import (
    DEFAULT_BUDGET,
    BruhatElement,
    BudgetExceeded,
    InversionSet,
    ZieglerViolation,
    enumerate_admissible_classes,
    enumerate_bruhat,
    hasse,
    maximal_chains,
    ziegler_check,
)
from .insertion import insert
from .operads import (
    BigBruhatElement,
    big_compose,
    monotone_compose_check,
    small_compose,
    small_domain,
    standard_instances,
    SmallBruhatOperad,
    SymmetricOperad,
    sym_domain,
    verify_operad_laws,
)

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_MALFORMED = 0, 1, 2, 3
DEFAULT_LAW_BUDGET = 20_000


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_json(args) -> Any:
    try:
        if args.input in (None, "-"):
            return json.load(sys.stdin)
        with open(args.input) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(EXIT_MALFORMED, "malformed_input", str(exc)) from exc


def _nd(args) -> tuple[int, int]:
    n = args.n if args.n is not None else args.pos_n
    d = args.d if args.d is not None else args.pos_d
    if n is None or d is None:
        raise CliError(EXIT_MALFORMED, "missing_parameter", "both n and d are required")
    if not 1 <= d <= n:
        raise CliError(EXIT_MALFORMED, "bad_parameter", f"need 1 <= d <= n, got n={n}, d={d}")
    return n, d


def _element(obj: Any) -> BruhatElement:
    if not isinstance(obj, dict):
        raise CliError(EXIT_MALFORMED, "malformed_input", f"expected an element object, got {obj!r}")
    return BruhatElement.from_json(obj)


def cmd_enumerate(args) -> int:
    n, d = _nd(args)
    elements = enumerate_bruhat(n, d, args.budget)
    out: dict[str, Any] = {"n": n, "d": d, "count": len(elements)}
    if args.list:
        out["elements"] = [e.to_json()["inv"] for e in elements]
    _emit(args, _dumps(out))
    return EXIT_OK


def cmd_oracle(args) -> int:
    n, d = _nd(args)
    fast = {e.members for e in enumerate_bruhat(n, d, args.budget)}
    slow = {e.members for e in enumerate_admissible_classes(n, d, args.budget)}
    agree = fast == slow
    out = {"n": n, "d": d, "bruhat": len(fast), "admissible_classes": len(slow), "agree": agree,
           "only_bruhat": len(fast - slow), "only_admissible": len(slow - fast)}
    _emit(args, _dumps(out))
    return EXIT_OK if agree else EXIT_INVALID


def cmd_validate(args) -> int:
    obj = _read_json(args)
    if not isinstance(obj, dict):
        raise CliError(EXIT_MALFORMED, "malformed_input", "expected an element object")
    inv = InversionSet.from_json(obj)
    bad = ziegler_check(inv)
    _emit(args, _dumps({"n": inv.n, "d": inv.d, "valid": not bad, "violations": [list(v) for v in bad]}))
    return EXIT_INVALID if bad else EXIT_OK


def cmd_insert(args) -> int:
    obj = _read_json(args)
    try:
        lhs, rhs = _element(obj["lhs"]), _element(obj["rhs"])
        j = args.j if args.j is not None else obj["j"]
    except (KeyError, TypeError) as exc:
        raise CliError(EXIT_MALFORMED, "malformed_input", f"insert needs lhs, rhs and j: {exc}") from exc
    _emit(args, _dumps(insert(lhs, rhs, j).to_json()))
    return EXIT_OK


def cmd_compose(args) -> int:
    obj = _read_json(args)
    try:
        kind = obj.get("operad", "small")
        outer, parts = obj["outer"], obj["parts"]
        arity = obj.get("arity", len(parts))
    except (AttributeError, KeyError) as exc:
        raise CliError(EXIT_MALFORMED, "malformed_input", f"compose needs outer and parts: {exc}") from exc
    if arity != len(parts):
        raise CliError(EXIT_MALFORMED, "arity_mismatch", f"arity tag {arity} but {len(parts)} parts")
    if kind == "small":
        result = small_compose(_element(outer), [_element(p) for p in parts]).to_json()
    elif kind == "big":
        result = big_compose(BigBruhatElement.from_json(outer),
                             [BigBruhatElement.from_json(p) for p in parts]).to_json()
    else:
        raise CliError(EXIT_MALFORMED, "malformed_input", f"unknown operad {kind!r}; use small or big")
    _emit(args, _dumps(result))
    return EXIT_OK


def cmd_hasse(args) -> int:
    n, d = _nd(args)
    h = hasse(n, d, args.budget)
    _emit(args, h.to_dot(args.verbose) if args.format == "dot" else _dumps(h.to_json()))
    return EXIT_OK


def cmd_chains(args) -> int:
    n, d = _nd(args)
    chains = []
    for c in maximal_chains(n, d, args.budget):
        chains.append([list(s) for s in c.added()])
    if args.format == "dot":
        lines = [f'digraph "chains B({n},{d})" {{']
        for k, chain in enumerate(chains):
            names = ["bottom"] + [f"c{k}_{t}" for t in range(1, len(chain))] + ["top"] if chain else ["bottom"]
            for t, s in enumerate(chain):
                lines.append(f'  {names[t]} -> {names[t + 1]} [label="{"".join(map(str, s))}"];')
        lines.append("}")
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _dumps({"n": n, "d": d, "count": len(chains), "chains": chains}))
    return EXIT_OK


def cmd_laws(args) -> int:
    limit_total = args.budget if args.budget is not None else DEFAULT_LAW_BUDGET
    reports = []
    for op, domain in standard_instances():
        limit = None if args.exhaustive or len(domain) ** 3 <= limit_total else limit_total
        reports.append(verify_operad_laws(op, domain, limit=limit, seed=args.seed))
    for op, domain in [(SymmetricOperad(), sym_domain(3)),
                       (SmallBruhatOperad(1), small_domain(1, [1, 2, 3])),
                       (SmallBruhatOperad(2), small_domain(2, [1, 2]))]:
        reports.append(monotone_compose_check(op, domain, seed=args.seed))
    ok = all(r.ok for r in reports)
    _emit(args, _dumps({"seed": args.seed, "ok": ok, "reports": [r.to_json() for r in reports]}))
    return EXIT_OK if ok else EXIT_INVALID


def cmd_export(args) -> int:
    n, d = _nd(args)
    if args.format == "dot":
        _emit(args, hasse(n, d, args.budget).to_dot(args.verbose))
    else:
        elements = enumerate_bruhat(n, d, args.budget)
        _emit(args, _dumps({"n": n, "d": d, "elements": [e.to_json() for e in elements]}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bruhat-operads", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nd=False, fmt=False, inp=False):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
        p.add_argument("--out", help="write output to PATH instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        if nd:
            p.add_argument("pos_n", nargs="?", type=int, metavar="n")
            p.add_argument("pos_d", nargs="?", type=int, metavar="d")
            p.add_argument("--n", type=int)
            p.add_argument("--d", type=int)
        if fmt:
            p.add_argument("--format", choices=["json", "dot"], default="json")
            p.add_argument("--verbose", action="store_true", help="inline inversion sets in DOT labels")
        if inp:
            p.add_argument("--input", help="JSON input file (default: stdin)")
        return p

    p = common(sub.add_parser("enumerate", help="count (and list) the elements of B(n,d)"), nd=True)
    p.add_argument("--list", action="store_true", help="include the canonical element list")
    p.set_defaults(func=cmd_enumerate)
    common(sub.add_parser("oracle", help="compare against admissible-order enumeration"), nd=True) \
        .set_defaults(func=cmd_oracle)
    common(sub.add_parser("validate", help="check Ziegler's criterion for a JSON element"), inp=True) \
        .set_defaults(func=cmd_validate)
    p = common(sub.add_parser("insert", help="insert rhs into lhs at offset j"), inp=True)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_insert)
    common(sub.add_parser("compose", help="small or big Bruhat operad composition"), inp=True) \
        .set_defaults(func=cmd_compose)
    common(sub.add_parser("hasse", help="Hasse diagram as JSON or DOT"), nd=True, fmt=True) \
        .set_defaults(func=cmd_hasse)
    common(sub.add_parser("chains", help="maximal chains"), nd=True, fmt=True).set_defaults(func=cmd_chains)
    p = sub.add_parser("laws", help="check operad laws and monotonicity")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None,
                   help=f"max sampled triples per operad (default {DEFAULT_LAW_BUDGET})")
    p.add_argument("--exhaustive", action="store_true", help="check every triple of every domain")
    p.add_argument("--out")
    p.set_defaults(func=cmd_laws)
    common(sub.add_parser("export", help="write all elements (json) or the Hasse diagram (dot)"),
           nd=True, fmt=True).set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        code, kind, msg = exc.code, exc.kind, str(exc)
    except BudgetExceeded as exc:
        code, kind, msg = EXIT_BUDGET, "budget_exceeded", str(exc)
    except ZieglerViolation as exc:
        code, kind, msg = EXIT_INVALID, "ziegler_violation", str(exc)
    except (ValueError, TypeError, KeyError) as exc:
        code, kind, msg = EXIT_MALFORMED, "malformed_input", str(exc)
    sys.stderr.write(_dumps({"error": kind, "message": msg, "exit_code": code}) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
