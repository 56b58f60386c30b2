"""Command line front end (installed as `sperner`).

Commands:
  table <id> [--csv]        result tables: t1, adjoints, chain4, v-small,
                            v-big, w-big, gmin
  sp <pattern> <n>          largest unrelated copy-family size (or bracket)
  asp <pattern> <k>         least ground size reaching k copies
  gmin <input> [<k>]        minimum generating set size; with k, of the k-th
                            power via the adjoint bridge, else brute force
  witness <pattern> <n>     build and certify an explicit family
  oracle sp <pattern> <n>   formula-free exhaustive count (small n)
  oracle perm-check <n>     chain-counting identity self-check
  oracle load-check <n>     W-copy chain-load identity self-check
  dim <pattern>             least embedding ground size, with an embedding

Patterns are builtin names (chain:<t>, antichain:<m>, v, w, powerset:<p>) or
paths to poset files (`poset <size>` header, then `cover <i> <j>` lines).
For gmin the input names a lattice: a poset spec, optionally with a `dn`
prefix, stands for its down-set lattice, and power:<lattice>:<k> asks for
the k-th power. Counts like k may use exact scientific notation (3e606).
Exit codes: 0 ok, 1 internal failure, 2 bad input, 3 resource limit,
4 hypothesis not met.

Plain output groups thousands with spaces and switches to 7-significant-
digit scientific notation above 15 digits; --csv emits exact digit strings.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bigcomb import fixed_ratio, parse_count, sci_approx
from .errors import InputError, SpernerError
from .lattice_genset import GminResult, gmin_bruteforce, gmin_power
from .oracle import (perms_through, perms_through_enum, sp_exhaustive,
                     w_copy_perm_load, w_perm_load_argmin_check,
                     w_perm_load_min)
from .poset_core import (DistLattice, Poset, builtin_poset, chain_poset,
                         down_set_lattice, mask_to_set_str, parse_poset_text)
from .sperner import (SpernerResult, asp_dispatch, min_embedding, sp_bounded,
                      sp_dispatch, vw_pattern_kind)
from .sperner_estimates import (asp_bracket, lower_v, lower_w, upper_v,
                                upper_w)
from .witness import certify, witness_bounded, witness_v, witness_w

_PLAIN_SCI_LIMIT = 10 ** 15


def _fmt_plain(value: int) -> str:
    if value >= _PLAIN_SCI_LIMIT:
        return sci_approx(value, 7)
    return f"{value:,}".replace(",", " ")


def _fmt_cell(value, csv: bool) -> str:
    if isinstance(value, int):
        return str(value) if csv else _fmt_plain(value)
    return str(value)


def _print_table(header: list[str], rows: list[list], csv: bool) -> None:
    cells = [[_fmt_cell(v, csv) for v in row] for row in rows]
    if csv:
        print(",".join(header))
        for row in cells:
            print(",".join(row))
        return
    widths = [len(h) for h in header]
    for row in cells:
        for c, text in enumerate(row):
            widths[c] = max(widths[c], len(text))
    print("  ".join(h.rjust(widths[c]) for c, h in enumerate(header)))
    for row in cells:
        print("  ".join(text.rjust(widths[c]) for c, text in enumerate(row)))


def _load_pattern(name: str) -> Poset:
    try:
        return builtin_poset(name)
    except InputError:
        pass
    if os.path.exists(name):
        with open(name, "r", encoding="utf-8") as fh:
            return parse_poset_text(fh.read())
    raise InputError(f"unknown pattern {name!r} (no builtin or file found)")


def _load_lattice(name: str) -> DistLattice:
    """Resolve a lattice spec: a poset spec (its down-set lattice is taken),
    optionally written with a `dn` prefix, as in `dnv` for the V poset."""
    try:
        return down_set_lattice(_load_pattern(name))
    except InputError:
        if name.startswith("dn"):
            return down_set_lattice(_load_pattern(name[2:]))
        raise


def _result_text(res) -> str:
    suffix = ", collapsed" if res.collapsed else ""
    route = res.method if isinstance(res, SpernerResult) else res.route
    if res.exact:
        return f"{_fmt_plain(res.lo)} (route: {route}{suffix})"
    return f"{_fmt_plain(res.lo)}..{_fmt_plain(res.hi)} (route: {route})"


def _result_csv(res) -> str:
    route = res.method if isinstance(res, SpernerResult) else res.route
    suffix = ",collapsed" if res.collapsed else ""
    return f"{res.lo},{res.hi},{route}{suffix}"


# --- tables --------------------------------------------------------------------

def _table_t1():
    header = ["n", "lower", "upper"]
    rows = [[n, lower_w(n), upper_w(n)] for n in range(3, 31)]
    return header, rows


def _table_adjoints():
    header = ["k", "lo", "hi"]
    rows = []
    for k in range(1, 16):
        lo, hi = asp_bracket("w", k)
        rows.append([k, lo, hi])
    return header, rows


def _table_chain4():
    header = ["n", "count"]
    pattern = chain_poset(4)
    rows = [[n, sp_bounded(pattern, n).value] for n in (17, 18, 2024, 2025, 2026)]
    return header, rows


def _table_v_small():
    header = ["n", "lower", "upper"]
    rows = [[n, lower_v(n), upper_v(n)] for n in range(2, 14)]
    return header, rows


def _table_v_big():
    header = ["n", "lower", "upper", "ratio"]
    rows = []
    for n in (14, 15, 2022, 2023):
        lo, hi = lower_v(n), upper_v(n)
        rows.append([n, lo, hi, fixed_ratio(hi, lo, 9)])
    return header, rows


def _table_w_big():
    header = ["n", "lower", "upper", "ratio"]
    rows = []
    for n in (2022, 2023, 2024):
        lo, hi = lower_w(n), upper_w(n)
        rows.append([n, lo, hi, fixed_ratio(hi, lo, 9)])
    return header, rows


def _table_gmin():
    header = ["lattice", "k", "gmin"]
    inputs = [("chain4", chain_poset(4)), ("dn-v", builtin_poset("v")),
              ("dn-w", builtin_poset("w"))]
    ks = ["2022", "2023", "3e606", "5e606"]
    rows = []
    for name, base in inputs:
        lattice = down_set_lattice(base)
        for k_text in ks:
            res = gmin_power(lattice, parse_count(k_text))
            rows.append([name, k_text, res.value])
    return header, rows


_TABLES = {
    "t1": _table_t1,
    "adjoints": _table_adjoints,
    "chain4": _table_chain4,
    "v-small": _table_v_small,
    "v-big": _table_v_big,
    "w-big": _table_w_big,
    "gmin": _table_gmin,
}


# --- command handlers ------------------------------------------------------------

def _cmd_table(args) -> int:
    builder = _TABLES.get(args.id)
    if builder is None:
        raise InputError(
            f"unknown table {args.id!r}; pick one of {', '.join(sorted(_TABLES))}")
    header, rows = builder()
    _print_table(header, rows, args.csv)
    return 0


def _cmd_sp(args) -> int:
    pattern = _load_pattern(args.pattern)
    n = parse_count(args.n)
    res = sp_dispatch(pattern, n)
    print(_result_csv(res) if args.csv else _result_text(res))
    return 0


def _cmd_asp(args) -> int:
    pattern = _load_pattern(args.pattern)
    k = parse_count(args.k)
    res = asp_dispatch(pattern, k)
    print(_result_csv(res) if args.csv else _result_text(res))
    return 0


def _cmd_gmin(args) -> int:
    name, k_text = args.input, args.k
    if name.startswith("power:"):
        # power:<lattice>:<k> folds the exponent into the spec
        if k_text is not None:
            raise InputError("power:...:<k> already carries the exponent; "
                             "drop the separate k argument")
        _, _, rest = name.partition(":")
        name, sep, k_text = rest.rpartition(":")
        if not sep:
            raise InputError("power input needs the form power:<lattice>:<k>")
    lattice = _load_lattice(name)
    if k_text is None:
        kwargs = {}
        if args.cap is not None:
            kwargs["cap"] = args.cap
        if args.time_budget is not None:
            kwargs["time_budget"] = args.time_budget
        count, witness = gmin_bruteforce(lattice, **kwargs)
        rendered = _render_generators(lattice, witness)
        print(f"{count} (generators: {rendered})")
        return 0
    res = gmin_power(lattice, parse_count(k_text))
    print(_result_csv(res) if args.csv else _result_text(res))
    return 0


def _render_generators(lattice: DistLattice, witness) -> str:
    if lattice.downset_masks is not None:
        return ";".join(mask_to_set_str(lattice.downset_masks[x]) for x in witness)
    return ";".join(str(x) for x in witness)


def _cmd_witness(args) -> int:
    pattern = _load_pattern(args.pattern)
    n = parse_count(args.n)
    kwargs = {}
    if args.cap is not None:
        kwargs["cap"] = args.cap
    kind = vw_pattern_kind(pattern)
    from .poset_core import are_isomorphic, v_poset, w_poset
    if kind == "w" and are_isomorphic(pattern, w_poset())[0]:
        family = witness_w(n, **kwargs)
    elif kind == "v" and are_isomorphic(pattern, v_poset())[0]:
        family = witness_v(n, **kwargs)
    else:
        family = witness_bounded(pattern, n, **kwargs)
    print(f"copies: {len(family)}")
    cert = certify(family)
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            fh.write(family.dump())
        print(f"dump written: {args.dump}")
    if cert.ok:
        print(f"certified: true ({cert.mode})")
        return 0
    print(f"certified: FAILED ({cert.mode}): {cert.failure}")
    return 1


def _cmd_oracle_sp(args) -> int:
    pattern = _load_pattern(args.pattern)
    n = parse_count(args.n)
    kwargs = {}
    if args.cap is not None:
        kwargs["cap"] = args.cap
    if args.time_budget is not None:
        kwargs["time_budget"] = args.time_budget
    res = sp_exhaustive(pattern, n, **kwargs)
    print(res.value)
    if args.dump:
        cert = certify(res.family)
        if not cert.ok:
            raise SpernerError(f"witness failed certification: {cert.failure}")
        with open(args.dump, "w", encoding="utf-8") as fh:
            fh.write(res.family.dump())
        print(f"dump written: {args.dump} (certified, {len(res.family)} copies)")
    return 0


def _cmd_oracle_perm_check(args) -> int:
    n = parse_count(args.n)
    if n < 0 or n > 7:
        raise InputError("perm-check runs for 0 <= n <= 7")
    checked = 0
    for x_mask in range(1 << n):
        closed = perms_through(x_mask, n)  # self-checks the subset reading
        if perms_through_enum(x_mask, n, "equals") != closed:
            print(f"FAILED at subset mask {x_mask:#x}")
            return 1
        checked += 1
    print(f"ok: {checked} subsets checked (both enumerations match the closed form)")
    return 0


def _cmd_oracle_load_check(args) -> int:
    n = parse_count(args.n)
    if n < 3:
        raise InputError("load-check needs n >= 3")
    import math
    argmin, best = w_perm_load_min(n)
    ok_argmin = w_perm_load_argmin_check(n)
    quotient = math.factorial(n) // best
    ok_quotient = quotient == upper_w(n)
    if ok_argmin and ok_quotient:
        print(f"ok: minimum load {best} at bottom size {argmin}; "
              f"floor(n!/load) = {quotient} matches the upper estimate")
        return 0
    print(f"FAILED: argmin check {ok_argmin}, quotient check {ok_quotient}")
    return 1


def _cmd_dim(args) -> int:
    pattern = _load_pattern(args.pattern)
    kwargs = {}
    if args.cap is not None:
        kwargs["cap"] = args.cap
    p, emb = min_embedding(pattern, **kwargs)
    print(p)
    print("embedding: " + ";".join(mask_to_set_str(m) for m in emb.images))
    return 0


# --- parser --------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true",
                        help="machine-readable output with exact digits")
    common.add_argument("--cap", type=int, default=None,
                        help="override the command's resource cap")
    common.add_argument("--time-budget", type=float, default=None,
                        help="abort long searches after this many seconds")
    common.add_argument("--dump", metavar="FILE", default=None,
                        help="write the witness family to FILE")

    parser = argparse.ArgumentParser(
        prog="sperner",
        description="Unrelated copy families in subset lattices and "
                    "minimum generating sets of lattice powers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="print a result table")
    p.add_argument("id", help="t1, adjoints, chain4, v-small, v-big, w-big, gmin")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("sp", parents=[common], help="count query")
    p.add_argument("pattern")
    p.add_argument("n")
    p.set_defaults(func=_cmd_sp)

    p = sub.add_parser("asp", parents=[common], help="adjoint query")
    p.add_argument("pattern")
    p.add_argument("k")
    p.set_defaults(func=_cmd_asp)

    p = sub.add_parser("gmin", parents=[common],
                       help="minimum generating set size")
    p.add_argument("input",
                   help="lattice spec: a poset (its down-set lattice is "
                        "taken, `dn` prefix allowed) or power:<lattice>:<k>")
    p.add_argument("k", nargs="?", default=None,
                   help="power exponent; omit to brute-force the lattice itself")
    p.set_defaults(func=_cmd_gmin)

    p = sub.add_parser("witness", parents=[common],
                       help="build and certify an explicit family")
    p.add_argument("pattern")
    p.add_argument("n")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("oracle", help="formula-free cross-checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("sp", parents=[common], help="exhaustive count")
    q.add_argument("pattern")
    q.add_argument("n")
    q.set_defaults(func=_cmd_oracle_sp)
    q = osub.add_parser("perm-check", parents=[common],
                        help="chain-counting identity check")
    q.add_argument("n")
    q.set_defaults(func=_cmd_oracle_perm_check)
    q = osub.add_parser("load-check", parents=[common],
                        help="W-copy chain-load identity check")
    q.add_argument("n")
    q.set_defaults(func=_cmd_oracle_load_check)

    p = sub.add_parser("dim", parents=[common],
                       help="least embedding ground size")
    p.add_argument("pattern")
    p.set_defaults(func=_cmd_dim)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpernerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
