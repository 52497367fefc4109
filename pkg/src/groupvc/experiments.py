"""Seeded Monte Carlo harness for the VC-dimension law of large numbers.

Records carry the rate r = 1/min(p, 1-p), the normalization log_r N, and the
theorem band 10 * log_r log_r N (undefined when log_r N <= 1; vacuously wide
at desk scale, reported anyway).  Trials that exceed the VC search frontier
cap are recorded with an error marker, never dropped; in CSV an error row
has an empty vcdim column and "error:<kind>" in the in_band column.

Every trial is a pure function of (base_seed, N, trial index), so results do
not depend on execution order.  Standard deviations use the population
convention.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import FrontierCapError
from .groups import FiniteGroup, group_family
from .sampling import SeededRng, bernoulli_subset, derive_rng, symmetrize, uniform_fixed_size
from .setsystem import Subset, translate_family, vc_dim
from .tiling import greedy_disjoint_translates

MODELS = ("bernoulli", "fixed-size", "fixed-size-symmetric")

RECORD_HEADER = "model,group,N,p,r,seed,trial,vcdim,log_r_N,band,in_band"
SUMMARY_HEADER = (
    "model,group,N,p,trials,errors,mean_vcdim,sd_vcdim,mean_ratio,"
    "frac_in_band,min_vcdim,max_vcdim,histogram"
)
_CSV_COMMENTS = (
    "# groupvc experiment output; sd uses the population convention",
    "# defaults: seed=0 trials=100 format=csv",
)


def rate_parameter(p: float) -> float:
    """r = 1/min(p, 1-p); infinite at the degenerate boundaries."""
    m = min(p, 1.0 - p)
    return math.inf if m <= 0.0 else 1.0 / m


def log_base_r(n: int, r: float) -> float:
    if r == math.inf:
        return 0.0
    if r == 2.0:
        return math.log2(n)
    return math.log(n) / math.log(r)


def band_width(n: int, r: float) -> Optional[float]:
    """10 * log_r log_r N, or None when log_r N <= 1 leaves it undefined."""
    lrn = log_base_r(n, r)
    if lrn <= 1.0:
        return None
    return 10.0 * math.log(lrn) / math.log(r)


@dataclass(frozen=True)
class ExperimentRecord:
    model: str
    group: str
    N: int
    p: float
    r: float
    seed: int
    trial: int
    vcdim: Optional[int]
    log_r_N: float
    band: Optional[float]
    in_band: Optional[bool]
    error: Optional[str] = None

    def sort_key(self):
        return (self.group, self.N, self.p, self.model, self.trial)


def make_record(
    model: str,
    group: str,
    n: int,
    p: float,
    seed: int,
    trial: int,
    vcdim: Optional[int],
    error: Optional[str] = None,
    r: Optional[float] = None,
) -> ExperimentRecord:
    r_val = rate_parameter(p) if r is None else r
    lrn = log_base_r(n, r_val)
    band = band_width(n, r_val)
    in_band: Optional[bool]
    if error is not None or vcdim is None or band is None:
        in_band = None
    else:
        in_band = abs(vcdim - lrn) <= band
    if vcdim is not None:
        limit = n.bit_length() - 1
        if not 0 <= vcdim <= max(limit, 0):
            raise ValueError(f"vcdim {vcdim} violates the [0, log2 {n}] bound")
    return ExperimentRecord(
        model, group, n, p, r_val, seed, trial, vcdim, lrn, band, in_band, error
    )


def _sample_subset(g: FiniteGroup, model: str, p: float, rng: SeededRng) -> Subset:
    if model == "bernoulli":
        return bernoulli_subset(g, p, rng)
    d = round(p * g.order)
    a = uniform_fixed_size(g, d, rng)
    if model == "fixed-size-symmetric":
        a = symmetrize(g, a)
    return a


def run_lln(
    group_maker: str,
    sizes: Sequence[int],
    p: float,
    trials: int,
    base_seed: int,
    model: str = "bernoulli",
    frontier_cap: int = 1_000_000,
    workers: int = 1,
) -> list[ExperimentRecord]:
    """Sampled VC-dimension records for each size and trial, deterministic.

    Trial i at size N uses the sub-stream (base_seed, N, i); trials whose VC
    search hits the frontier cap yield error records and the run continues.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {MODELS}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0,1], got {p}")

    def one_trial(n: int, trial: int) -> ExperimentRecord:
        g = group_family(group_maker, n)
        rng = derive_rng(base_seed, n, trial)
        a = _sample_subset(g, model, p, rng)
        try:
            value = vc_dim(translate_family(g, a), frontier_cap=frontier_cap)
            return make_record(model, g.descriptor, n, p, base_seed, trial, value)
        except FrontierCapError:
            return make_record(
                model, g.descriptor, n, p, base_seed, trial, None,
                error="frontier-cap",
            )

    jobs = [(n, i) for n in sizes for i in range(trials)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda job: one_trial(*job), jobs))
    else:
        records = [one_trial(n, i) for n, i in jobs]
    records.sort(key=ExperimentRecord.sort_key)
    return records


@dataclass(frozen=True)
class Summary:
    """Exact aggregates for one (group, N, p, model) bucket."""

    model: str
    group: str
    N: int
    p: float
    trials: int
    errors: int
    mean_vcdim: Optional[float]
    sd_vcdim: Optional[float]
    mean_ratio: Optional[float]
    frac_in_band: float
    min_vcdim: Optional[int]
    max_vcdim: Optional[int]
    histogram: tuple[int, ...]  # counts for vcdim = 0 .. floor(log2 N)


def summarize(records: Sequence[ExperimentRecord]) -> list[Summary]:
    """Group records by (group, N, p, model) and aggregate exactly."""
    if not records:
        raise ValueError("cannot summarize zero records")
    buckets: dict[tuple, list[ExperimentRecord]] = {}
    for rec in records:
        buckets.setdefault((rec.group, rec.N, rec.p, rec.model), []).append(rec)
    out = []
    for (group, n, p, model), recs in sorted(buckets.items()):
        values = [r.vcdim for r in recs if r.vcdim is not None]
        errors = sum(1 for r in recs if r.error is not None)
        hist = [0] * (max(n.bit_length() - 1, 0) + 1)
        for v in values:
            hist[v] += 1
        if values:
            mean = sum(values) / len(values)
            sd = math.sqrt(sum((v - mean) ** 2 for v in values) / len(values))
            ratios = [
                r.vcdim / r.log_r_N for r in recs
                if r.vcdim is not None and r.log_r_N > 0
            ]
            mean_ratio = sum(ratios) / len(ratios) if ratios else None
            lo, hi = min(values), max(values)
        else:
            mean = sd = mean_ratio = None
            lo = hi = None
        frac = sum(1 for r in recs if r.in_band) / len(recs)
        out.append(
            Summary(
                model, group, n, p, len(recs), errors, mean, sd, mean_ratio,
                frac, lo, hi, tuple(hist),
            )
        )
    return out


@dataclass(frozen=True)
class CutoutResult:
    """Empirical cut-out failure probability next to the tiling bound."""

    empirical: float
    subfamily_bound: float
    ell: int
    trials: int
    probe_size: int
    pattern_size: int

    @property
    def bound_standard_error(self) -> float:
        q = self.subfamily_bound
        return math.sqrt(q * (1.0 - q) / self.trials)


def cutout_probability(
    g: FiniteGroup,
    u: Subset,
    k_sub: Subset,
    p: float,
    trials: int,
    base_seed: int,
) -> CutoutResult:
    """Estimate Pr[K is not cut out of U by the translates of a Bernoulli A].

    Also evaluates the disjoint-translate subfamily bound
    (1 - p^|K| (1-p)^(|U|-|K|))^l with l from the greedy packing of U; the
    full family only adds witnesses, so the empirical probability may not
    exceed the bound by more than sampling noise (asserted at 5 sigma).
    """
    if not k_sub.issubset(u):
        raise ValueError("pattern K must be a subset of the probe U")
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must be in (0,1), got {p}")
    if trials < 1:
        raise ValueError("need at least one trial")
    n = g.order
    if u.bits:
        ell = len(greedy_disjoint_translates(g, u).reps)
    else:
        ell = n  # empty probe: every pattern is cut out regardless
    k_len = len(k_sub)
    u_len = len(u)
    bound = (1.0 - p**k_len * (1.0 - p) ** (u_len - k_len)) ** ell

    elems = sorted(u)
    want = [(x in k_sub) for x in elems]
    # probe_map[t][j] is the element whose membership in A decides whether
    # elems[j] lands in tA.
    probe_map = [[g.mul(g.inv(t), x) for x in elems] for t in range(n)]
    misses = 0
    for trial in range(trials):
        rng = derive_rng(base_seed, trial)
        a = bernoulli_subset(g, p, rng).bits
        cut = False
        for row in probe_map:
            if all((a >> row[j] & 1) == want[j] for j in range(u_len)):
                cut = True
                break
        if not cut:
            misses += 1
    empirical = misses / trials
    result = CutoutResult(empirical, bound, ell, trials, u_len, k_len)
    assert empirical <= bound + 5.0 * result.bound_standard_error, (
        f"empirical {empirical} exceeds subfamily bound {bound} by over 5 sigma"
    )
    return result


def _fmt_float(v: Optional[float]) -> str:
    if v is None:
        return "n/a"
    if v == math.inf:
        return "inf"
    return repr(v)


def _record_row(rec: ExperimentRecord) -> str:
    if rec.error is not None:
        vcdim = ""
        in_band = f"error:{rec.error}"
    else:
        vcdim = str(rec.vcdim)
        in_band = "n/a" if rec.in_band is None else str(rec.in_band).lower()
    return ",".join(
        [
            rec.model,
            rec.group,
            str(rec.N),
            repr(rec.p),
            _fmt_float(rec.r),
            str(rec.seed),
            str(rec.trial),
            vcdim,
            repr(rec.log_r_N),
            _fmt_float(rec.band),
            in_band,
        ]
    )


def _summary_row(s: Summary) -> str:
    hist = ";".join(f"{v}:{c}" for v, c in enumerate(s.histogram))
    return ",".join(
        [
            s.model,
            s.group,
            str(s.N),
            repr(s.p),
            str(s.trials),
            str(s.errors),
            _fmt_float(s.mean_vcdim),
            _fmt_float(s.sd_vcdim),
            _fmt_float(s.mean_ratio),
            repr(s.frac_in_band),
            "n/a" if s.min_vcdim is None else str(s.min_vcdim),
            "n/a" if s.max_vcdim is None else str(s.max_vcdim),
            hist,
        ]
    )


def records_to_csv(records: Sequence[ExperimentRecord]) -> str:
    lines = list(_CSV_COMMENTS) + [RECORD_HEADER]
    lines += [_record_row(r) for r in records]
    return "\n".join(lines) + "\n"


def summaries_to_csv(summaries: Sequence[Summary]) -> str:
    lines = list(_CSV_COMMENTS) + [SUMMARY_HEADER]
    lines += [_summary_row(s) for s in summaries]
    return "\n".join(lines) + "\n"


def emit_csv(
    items: Sequence[Union[ExperimentRecord, Summary]], path
) -> None:
    """Write records or summaries as UTF-8 CSV with LF endings."""
    if items and isinstance(items[0], Summary):
        text = summaries_to_csv(items)
    else:
        text = records_to_csv(items)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def _record_json(rec: ExperimentRecord) -> dict:
    if rec.error is not None:
        vcdim = None
        in_band = f"error:{rec.error}"
    else:
        vcdim = rec.vcdim
        in_band = "n/a" if rec.in_band is None else rec.in_band
    return {
        "model": rec.model,
        "group": rec.group,
        "N": rec.N,
        "p": rec.p,
        "r": "inf" if rec.r == math.inf else rec.r,
        "seed": rec.seed,
        "trial": rec.trial,
        "vcdim": vcdim,
        "log_r_N": rec.log_r_N,
        "band": "n/a" if rec.band is None else rec.band,
        "in_band": in_band,
    }


def emit_json(records: Sequence[ExperimentRecord], path) -> None:
    """JSON mirror of the CSV schema with identical field names."""
    payload = [_record_json(r) for r in records]
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def parse_csv(path) -> list[ExperimentRecord]:
    """Inverse of emit_csv for record files; field-for-field round trip."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh if not ln.startswith("#")]
    if not lines or lines[0] != RECORD_HEADER:
        got = lines[0] if lines else "<empty>"
        raise ValueError(f"bad record CSV header: expected {RECORD_HEADER!r}, got {got!r}")
    records = []
    for ln in lines[1:]:
        if not ln:
            continue
        parts = ln.split(",")
        if len(parts) != 11:
            raise ValueError(f"bad record row: {ln!r}")
        model, group, n_s, p_s, r_s, seed_s, trial_s, vc_s, lrn_s, band_s, ib_s = parts
        error = None
        vcdim: Optional[int] = None
        in_band: Optional[bool] = None
        if ib_s.startswith("error:"):
            error = ib_s[len("error:"):]
        else:
            vcdim = int(vc_s)
            in_band = None if ib_s == "n/a" else ib_s == "true"
        records.append(
            ExperimentRecord(
                model,
                group,
                int(n_s),
                float(p_s),
                math.inf if r_s == "inf" else float(r_s),
                int(seed_s),
                int(trial_s),
                vcdim,
                float(lrn_s),
                None if band_s == "n/a" else float(band_s),
                in_band,
                error,
            )
        )
    return records
