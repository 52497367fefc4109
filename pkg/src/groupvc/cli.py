"""Command-line front end; a thin layer over the library.

Defaults: --seed 0, --trials 100, --format csv.  Exit status is 0 only when
the run completed without producing any error records.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from .errors import FrontierCapError
from .experiments import (
    MODELS,
    cutout_probability,
    emit_csv,
    emit_json,
    log_base_r,
    run_lln,
    summarize,
)
from .groups import group_from_descriptor
from .residues import is_prime, paley_digraph, residue_experiment
from .sampling import bernoulli_subset, derive_rng
from .setsystem import Subset, translate_family, vc_dim
from .cayley import neighborhood_family
from .tiling import greedy_cover, greedy_disjoint_translates


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="base seed (default: 0)")
    sub.add_argument(
        "--trials", type=int, default=100, help="number of trials (default: 100)"
    )
    sub.add_argument("--out", default=None, help="output file path")
    sub.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="output format (default: csv)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupvc",
        description="Exact VC-dimension of translate families over finite groups",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("vcdim", help="VC-dimension of one translate family")
    sp.add_argument("--group", required=True, help="group descriptor, e.g. C12, D5, C3xC4")
    sp.add_argument("--set", dest="set_hex", help="base set as lowercase hex bits")
    sp.add_argument("--p", type=float, help="sample the base set Bernoulli(p) instead")
    _add_common(sp)

    sp = subs.add_parser("sample", help="seeded Monte Carlo VC-dimension trials")
    sp.add_argument("--group", default="C", choices=("C", "D"), help="group family (default: C)")
    sp.add_argument("--sizes", required=True, help="comma-separated group orders")
    sp.add_argument("--p", type=float, required=True, help="Bernoulli parameter in (0,1)")
    sp.add_argument("--model", choices=MODELS, default="bernoulli",
                    help="sampling model (default: bernoulli)")
    sp.add_argument("--frontier-cap", type=int, default=1_000_000,
                    help="VC search frontier cap (default: 1000000)")
    sp.add_argument("--workers", type=int, default=1, help="worker threads (default: 1)")
    sp.add_argument("--summary-out", default=None,
                    help="also write per-(group,N,p,model) summary CSV here")
    _add_common(sp)

    sp = subs.add_parser("cutout", help="cut-out failure probability vs the tiling bound")
    sp.add_argument("--group", required=True, help="group descriptor")
    sp.add_argument("--u", required=True, help="probe set U as hex bits")
    sp.add_argument("--k", required=True, help="pattern K as hex bits, K subset of U")
    sp.add_argument("--p", type=float, required=True, help="Bernoulli parameter in (0,1)")
    _add_common(sp)

    sp = subs.add_parser("paley", help="VC-dimension of the Paley digraph")
    sp.add_argument("--n", type=int, required=True, help="prime modulus")
    _add_common(sp)

    sp = subs.add_parser("residue", help="power-residue Cayley graph experiment")
    sp.add_argument("--r", type=int, required=True, help="power-residue exponent")
    sp.add_argument("--primes", required=True,
                    help="comma list (5,13) or inclusive range (5..199) of primes")
    sp.add_argument("--congruent", action="store_true",
                    help="require N = 1 (mod r); violations become error records")
    sp.add_argument("--frontier-cap", type=int, default=1_000_000,
                    help="VC search frontier cap (default: 1000000)")
    sp.add_argument("--prime-cap", type=int, default=1009,
                    help="largest accepted prime (default: 1009)")
    _add_common(sp)

    sp = subs.add_parser("tile", help="greedy disjoint translate packing")
    sp.add_argument("--group", required=True, help="group descriptor")
    sp.add_argument("--u", required=True, help="probe set U as hex bits")
    _add_common(sp)

    sp = subs.add_parser("cover", help="greedy cover of the group by translates")
    sp.add_argument("--group", required=True, help="group descriptor")
    sp.add_argument("--s", dest="s_hex", required=True, help="covering set S as hex bits")
    _add_common(sp)

    return parser


def _parse_primes(text: str) -> list[int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]
    return [int(tok) for tok in text.split(",") if tok]


def _emit(records, out: Optional[str], fmt: str) -> None:
    if out is None:
        return
    if fmt == "json":
        emit_json(records, out)
    else:
        emit_csv(records, out)


def _cmd_vcdim(args) -> int:
    g = group_from_descriptor(args.group)
    if (args.set_hex is None) == (args.p is None):
        raise SystemExit("vcdim needs exactly one of --set or --p")
    if args.set_hex is not None:
        a = Subset.from_hex(g.order, args.set_hex)
    else:
        if not 0.0 <= args.p <= 1.0:
            raise SystemExit(f"--p must be in [0,1], got {args.p}")
        a = bernoulli_subset(g, args.p, derive_rng(args.seed, g.order, 0))
    value = vc_dim(translate_family(g, a))
    print(value)
    return 0


def _cmd_sample(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    if not 0.0 < args.p < 1.0:
        raise SystemExit(f"--p must be in (0,1) for sampling, got {args.p}")
    records = run_lln(
        args.group, sizes, args.p, args.trials, args.seed,
        model=args.model, frontier_cap=args.frontier_cap, workers=args.workers,
    )
    _emit(records, args.out, args.format)
    if args.summary_out:
        emit_csv(summarize(records), args.summary_out)
    for s in summarize(records):
        mean = "n/a" if s.mean_vcdim is None else f"{s.mean_vcdim:.3f}"
        print(
            f"{s.group} N={s.N} p={s.p} model={s.model}: trials={s.trials} "
            f"errors={s.errors} mean={mean}"
        )
    errors = sum(1 for r in records if r.error is not None)
    if errors:
        print(f"{errors} trials failed (frontier cap)", file=sys.stderr)
        return 1
    return 0


def _cmd_cutout(args) -> int:
    g = group_from_descriptor(args.group)
    u = Subset.from_hex(g.order, args.u)
    k = Subset.from_hex(g.order, args.k)
    if not 0.0 < args.p < 1.0:
        raise SystemExit(f"--p must be in (0,1), got {args.p}")
    res = cutout_probability(g, u, k, args.p, args.trials, args.seed)
    print(f"empirical  Pr[K not cut out] = {res.empirical:.6g}")
    print(f"subfamily bound (1-p^k q^(u-k))^l = {res.subfamily_bound:.6g}  (l = {res.ell})")
    return 0


def _cmd_paley(args) -> int:
    if not is_prime(args.n):
        raise SystemExit(f"--n must be prime, got {args.n}")
    fam = neighborhood_family(paley_digraph(args.n))
    try:
        value = vc_dim(fam)
    except FrontierCapError as exc:
        print(f"paley N={args.n}: {exc}", file=sys.stderr)
        return 1
    ratio = value / math.log2(args.n)
    print(f"paley N={args.n} vcdim={value} log2N={math.log2(args.n):.4f} ratio={ratio:.4f}")
    return 0


def _cmd_residue(args) -> int:
    primes = _parse_primes(args.primes)
    if not primes:
        raise SystemExit("no primes selected")
    records = residue_experiment(
        primes, args.r, require_congruence=args.congruent,
        frontier_cap=args.frontier_cap, prime_cap=args.prime_cap,
    )
    _emit(records, args.out, args.format)
    print("N,vcdim,log_r_N,ratio_log_r,log2_N,ratio_log2,error")
    for rec in records:
        if rec.vcdim is None:
            print(f"{rec.N},,,,,,{rec.error}")
            continue
        l2 = math.log2(rec.N)
        ratio_r = rec.vcdim / rec.log_r_N if rec.log_r_N > 0 else float("nan")
        print(
            f"{rec.N},{rec.vcdim},{rec.log_r_N:.4f},{ratio_r:.4f},"
            f"{l2:.4f},{rec.vcdim / l2:.4f},"
        )
    errors = sum(1 for r in records if r.error is not None)
    return 1 if errors else 0


def _cmd_tile(args) -> int:
    g = group_from_descriptor(args.group)
    u = Subset.from_hex(g.order, args.u)
    packing = greedy_disjoint_translates(g, u)
    k = len(u)
    print(f"reps: {' '.join(str(s) for s in packing.reps)}")
    print(f"l = {len(packing.reps)} >= N/k^2 = {g.order / (k * k):.4f}")
    return 0


def _cmd_cover(args) -> int:
    g = group_from_descriptor(args.group)
    s = Subset.from_hex(g.order, args.s_hex)
    cover = greedy_cover(g, s)
    ell = len(s)
    bound = (g.order / ell) * (math.log(ell) + 1.0)
    print(f"reps: {' '.join(str(t) for t in cover.reps)}")
    print(f"m = {len(cover.reps)} <= (N/l)(ln l + 1) = {bound:.4f}")
    return 0


_HANDLERS = {
    "vcdim": _cmd_vcdim,
    "sample": _cmd_sample,
    "cutout": _cmd_cutout,
    "paley": _cmd_paley,
    "residue": _cmd_residue,
    "tile": _cmd_tile,
    "cover": _cmd_cover,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except FrontierCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
