"""``census`` command line entry point."""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import type_space
from .arith import format_set, parse_int_list
from .census import GENUS_CEILING, CensusRow, baselines, elizalde_series, t_exact, t_lower, t_upper
from .construction import build_f_lt_2m, build_typed, count_typed_g
from .core import format_members
from .errors import ResourceLimitError
from .quad_field import bound_value, to_decimal
from . import tree_oracle
from .tree_oracle import genus_counts
from .type_space import KMAX_CEILING, ExponentHistogram, TypeDescriptor

TREE_HEADER = ["g", "n_g", "t_g", "n_phi", "t_phi", "t_over_n"]


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    max_genus: Optional[int] = None
    kmax: Optional[int] = None
    places: int = 5
    threads: Optional[int] = None
    out_path: Optional[str] = None
    resource_override: bool = False
    buckets: bool = False
    list_sets: bool = False
    k: Optional[int] = None
    m: Optional[int] = None
    g: Optional[int] = None
    a: Optional[str] = None
    b: Optional[str] = None
    s: Optional[str] = None

    def validate(self) -> None:
        if not 0 <= self.places <= 50:
            raise UsageError("--places must be in [0, 50]")
        if self.resource_override:
            return
        if self.kmax is not None and self.kmax > KMAX_CEILING:
            raise ResourceLimitError(
                f"enumeration too large: --kmax {self.kmax} exceeds {KMAX_CEILING} (use --override)"
            )
        if self.max_genus is not None and self.max_genus > GENUS_CEILING:
            raise ResourceLimitError(
                f"enumeration too large: --max-genus {self.max_genus} exceeds {GENUS_CEILING} (use --override)"
            )


def _csv_text(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _type_arg(cfg: RunConfig) -> TypeDescriptor:
    if cfg.k is None or cfg.a is None:
        raise UsageError("--k and --a are required")
    try:
        return TypeDescriptor.of(parse_int_list(cfg.a), cfg.k)
    except ValueError as exc:
        raise UsageError(f"invalid type: {exc}") from None


def _cmd_tree(cfg: RunConfig) -> str:
    g_max = cfg.max_genus
    if g_max is None or g_max < 1:
        raise UsageError("--max-genus must be a positive integer")
    ceiling = None if cfg.resource_override else tree_oracle.GENUS_CEILING
    counts = genus_counts(g_max, cfg.threads, ceiling)
    header = list(TREE_HEADER)
    if cfg.buckets:
        header += ["f_lt_2m", "f_2m_3m", "f_gt_3m"]
    rows = []
    for g in range(1, g_max + 1):
        r = CensusRow.build(g, counts.t[g], counts.n[g], cfg.places)
        row = [g, r.n_g, r.t_g, r.ratio_n, r.ratio_t, r.fraction]
        if cfg.buckets:
            lt2 = counts.f_lt_2m[g]
            row += [lt2, counts.t[g] - lt2, counts.n[g] - counts.t[g]]
        rows.append(row)
    return _csv_text(header, rows)


def _cmd_formula_t(cfg: RunConfig) -> str:
    g_max = cfg.max_genus
    if g_max is None or g_max < 1:
        raise UsageError("--max-genus must be a positive integer")
    ceiling = None if cfg.resource_override else GENUS_CEILING
    rows = [[g, t_lower(g), t_exact(g, ceiling), t_upper(g, ceiling)] for g in range(1, g_max + 1)]
    return _csv_text(["g", "t_lower", "t_exact", "t_upper"], rows)


def _cmd_bound(cfg: RunConfig) -> str:
    kmax = cfg.kmax
    if kmax is None or kmax < 0:
        raise UsageError("--kmax must be a non-negative integer")
    hist = ExponentHistogram({}, 0)
    rows = [[0, to_decimal(bound_value(hist), cfg.places)]]
    for k in range(1, kmax + 1):
        hist = hist + type_space.histogram_for_k(k, cfg.threads)
        rows.append([k, to_decimal(bound_value(hist), cfg.places)])
    return _csv_text(["k_M", "rhs"], rows)


def _cmd_types(cfg: RunConfig) -> str:
    if cfg.k is None or cfg.k < 1:
        raise UsageError("--k must be a positive integer")
    lines = [str(type_space.count_Ak(cfg.k))]
    if cfg.list_sets:
        lines.append(" ".join(format_set(t.elements) for t in type_space.enumerate_Ak(cfg.k)))
    return "\n".join(lines) + "\n"


def _cmd_construct(cfg: RunConfig) -> str:
    if cfg.m is None:
        raise UsageError("--m is required")
    try:
        if cfg.k is None:
            if cfg.a is not None or cfg.b is not None:
                raise UsageError("--a/--b need --k")
            s = build_f_lt_2m(cfg.m, parse_int_list(cfg.s or ""))
        else:
            if cfg.s is not None:
                raise UsageError("--s only applies without --k")
            s = build_typed(cfg.m, _type_arg(cfg), parse_int_list(cfg.b or ""))
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return format_members(s) + "\n"


def _cmd_count_type(cfg: RunConfig) -> str:
    if cfg.g is None or cfg.g < 1:
        raise UsageError("--g must be a positive integer")
    res = count_typed_g(cfg.g, _type_arg(cfg))
    return _csv_text(
        ["sum", "fibonacci", "exact_condition", "agree"],
        [[res.value, res.fibonacci, str(res.exact_condition).lower(), str(res.agree).lower()]],
    )


def _cmd_baselines(cfg: RunConfig) -> str:
    g_max = cfg.max_genus
    if g_max is None or g_max < 1:
        raise UsageError("--max-genus must be a positive integer")
    eli = elizalde_series(g_max)
    rows = []
    for g in range(1, g_max + 1):
        b = baselines(g)
        rows.append([g, b.bras_lower, b.bras_upper, b.dyck_upper, eli[g - 1]])
    return _csv_text(["g", "bras_lower", "bras_upper", "dyck_upper", "elizalde"], rows)


COMMANDS = {
    "tree": _cmd_tree,
    "formula-t": _cmd_formula_t,
    "bound": _cmd_bound,
    "types": _cmd_types,
    "construct": _cmd_construct,
    "count-type": _cmd_count_type,
    "baselines": _cmd_baselines,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Dispatch one subcommand; returns the process exit status."""
    stdout = stdout or sys.stdout
    try:
        if cfg.subcommand not in COMMANDS:
            raise UsageError(f"unknown subcommand {cfg.subcommand!r}")
        cfg.validate()
        env = os.environ.get("CENSUS_THREADS")
        if env:
            cfg.threads = max(1, int(env))
        if cfg.threads is not None:
            type_space.configured_threads = cfg.threads
        text = COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"census: error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"census: error: {exc}", file=sys.stderr)
        return 3
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="census", description="Construct and count numerical semigroups by genus."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (CENSUS_THREADS overrides; default: CPU count)")
    common.add_argument("--override", dest="resource_override", action="store_true",
                        help="lift the enumeration ceilings")
    common.add_argument("--out", dest="out_path", default=None, help="write output to this file")
    common.add_argument("--places", type=int, default=5, help="decimal places (default 5)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("tree", parents=[common],
                       help="n_g and t_g per genus from the semigroup tree",
                       description="Walk the semigroup tree and report n_g, t_g (f < 3m), "
                                   "n_g·φ^-g, t_g·φ^-g and t_g/n_g for each genus.")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--buckets", action="store_true",
                   help="add f<2m, 2m<f<3m and f>3m counts")

    p = sub.add_parser("formula-t", parents=[common],
                       help="t_g from the type counting formulas with its Fibonacci bounds",
                       description="t_g summed over types (A; k), with the lower bound over "
                                   "k <= g/3 and the upper bound over k <= g-1.")
    p.add_argument("--max-genus", type=int, required=True)

    p = sub.add_parser("bound", parents=[common],
                       help="partial sums of the φ-weighted type series",
                       description="φ/√5 + (1/√5)·Σ_{k<=k_M} Σ_A φ^-c(A,k), the lower bound on "
                                   "lim inf t_g·φ^-g, for k_M = 0..K.")
    p.add_argument("--kmax", type=int, required=True)

    p = sub.add_parser("types", parents=[common],
                       help="size (and members) of the family A_k",
                       description="Subsets A of [0,k-1] with 0 in A and k not in A+A.")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", dest="list_sets", action="store_true")

    p = sub.add_parser("construct", parents=[common],
                       help="build a semigroup of type (A; k), or with f < 2m",
                       description="With --k/--a: {0} ∪ (m+A) ∪ (2m+(A+A)∩[0,k]) ∪ B ∪ [2m+k+1,∞). "
                                   "Without --k: {0,m} ∪ S ∪ [2m,∞).")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--s")

    p = sub.add_parser("count-type", parents=[common],
                       help="genus-g count of one type and its Fibonacci form",
                       description="Σ_{m>k} C(m-1-|(A+A)∩[0,k]|, g+|A|-m-k-1) next to "
                                   "F_{g-|(A+A)∩[0,k]|+|A|-k-1}.")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", required=True)

    p = sub.add_parser("baselines", parents=[common],
                       help="earlier bounds on n_g",
                       description="2F_g, 1+3·2^(g-3), the Catalan bound and Elizalde's a_g.")
    p.add_argument("--max-genus", type=int, required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
