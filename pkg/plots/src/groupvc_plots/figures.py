"""The three figure kinds built from experiment record CSVs.

Figures are written as PNG without embedded timestamps so regeneration from
the same input is byte-stable.  The only statistics computed here are the
mean and population standard deviation, which must match the producer's
summary output exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .records import Row, SchemaError, load_rows, mean_sd

_SAVE_KWARGS = {"dpi": 110, "metadata": {"Software": None}}


@dataclass(frozen=True)
class PlotSpec:
    input_csv: str
    kind: str  # lln-trend | histogram | residue-ratio
    output: str
    title: Optional[str] = None


def render(spec: PlotSpec) -> None:
    if spec.kind == "lln-trend":
        plot_lln_trend(spec.input_csv, spec.output, title=spec.title)
    elif spec.kind == "histogram":
        plot_histogram(spec.input_csv, spec.output, title=spec.title)
    elif spec.kind == "residue-ratio":
        plot_residue_ratio(spec.input_csv, spec.output, title=spec.title)
    else:
        raise ValueError(f"unknown figure kind {spec.kind!r}")


def _family_of(group: str) -> str:
    return group.rstrip("0123456789")


def _series_stats(rows: list[Row]):
    """Per-N mean/sd of vcdim over successful rows, one series per
    (group family, p, model)."""
    series: dict[tuple, dict[int, list[int]]] = {}
    bands: dict[int, tuple[float, Optional[float]]] = {}
    for row in rows:
        bands[row.N] = (row.log_r_N, row.band)
        if row.vcdim is None:
            continue
        key = (_family_of(row.group), row.p, row.model)
        series.setdefault(key, {}).setdefault(row.N, []).append(row.vcdim)
    return series, bands


def plot_lln_trend(csv_path, out_path, title: Optional[str] = None) -> None:
    """Mean vcdim vs log_r N with +-1 sd bars, the y = x line, and the
    theorem band where defined."""
    rows = load_rows(csv_path)
    series, bands = _series_stats(rows)
    if not series or not any(len(by_n) >= 2 for by_n in series.values()):
        raise SchemaError("lln-trend needs >= 2 distinct N for one (family, p, model)")

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    xs_all = []
    for (family, p, model), by_n in sorted(series.items()):
        ns = sorted(by_n)
        xs = [bands[n][0] for n in ns]
        stats = [mean_sd(by_n[n]) for n in ns]
        means = [m for m, _ in stats]
        sds = [s for _, s in stats]
        xs_all += xs
        ax.errorbar(
            xs, means, yerr=sds, marker="o", capsize=3,
            label=f"{family}_N, p={p}, {model}",
        )
    lo, hi = min(xs_all), max(xs_all)
    pad = 0.5 + 0.05 * (hi - lo)
    line = [lo - pad, hi + pad]
    ax.plot(line, line, color="gray", linestyle="--", linewidth=1, label="y = x")
    band_ns = sorted(n for n, (_, b) in bands.items() if b is not None)
    if band_ns:
        bx = [bands[n][0] for n in band_ns]
        blo = [bands[n][0] - bands[n][1] for n in band_ns]
        bhi = [bands[n][0] + bands[n][1] for n in band_ns]
        ax.fill_between(bx, blo, bhi, alpha=0.12, color="tab:blue",
                        label="theorem band")
    ax.set_xlabel("log_r N")
    ax.set_ylabel("mean VC-dimension")
    ax.set_title(title or "VC-dimension of random translate families")
    ax.legend(loc="best", fontsize=8)
    fig.savefig(out_path, **_SAVE_KWARGS)
    plt.close(fig)


def plot_histogram(csv_path, out_path, title: Optional[str] = None) -> None:
    """Per-N histograms of the observed vcdim values."""
    rows = load_rows(csv_path)
    by_n: dict[int, list[int]] = {}
    for row in rows:
        if row.vcdim is not None:
            by_n.setdefault(row.N, []).append(row.vcdim)
    if not by_n:
        raise SchemaError("no successful rows to histogram")
    ns = sorted(by_n)
    fig, axes = plt.subplots(
        1, len(ns), figsize=(2.8 * len(ns) + 1.0, 3.2), squeeze=False
    )
    for ax, n in zip(axes[0], ns):
        values = by_n[n]
        top = max(values)
        counts = [values.count(v) for v in range(top + 2)]
        ax.bar(range(top + 2), counts, color="tab:blue")
        ax.set_title(f"N = {n}")
        ax.set_xlabel("vcdim")
    axes[0][0].set_ylabel("trials")
    fig.suptitle(title or "VC-dimension histograms")
    fig.tight_layout()
    fig.savefig(out_path, **_SAVE_KWARGS)
    plt.close(fig)


def plot_residue_ratio(csv_path, out_path, title: Optional[str] = None) -> None:
    """vcdim / log_r N and vcdim / log2 N against N, one figure, legend."""
    rows = load_rows(csv_path)
    data = [r for r in rows if r.vcdim is not None]
    if not data:
        raise SchemaError("no successful rows to plot")
    data.sort(key=lambda r: r.N)
    ns = [r.N for r in data]
    ratio_r = [r.vcdim / r.log_r_N for r in data]
    ratio_2 = [r.vcdim / math.log2(r.N) for r in data]
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    ax.plot(ns, ratio_r, marker="o", label="vcdim / log_r N")
    ax.plot(ns, ratio_2, marker="s", label="vcdim / log2 N")
    ax.axhline(1.0, color="gray", linestyle="--", linewidth=1)
    ax.set_xlabel("N")
    ax.set_ylabel("ratio")
    ax.set_title(title or "Power-residue Cayley graph VC-dimension ratios")
    ax.legend(loc="best")
    fig.savefig(out_path, **_SAVE_KWARGS)
    plt.close(fig)
