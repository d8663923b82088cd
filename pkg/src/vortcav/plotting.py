"""Figure rendering for the CLI report paths.

Figures are written next to the delimited output they visualize
(observables.csv, sweep.csv). Rendering is deterministic: fixed sizes,
fixed dpi, Agg backend, so identical runs produce byte-identical PNGs.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

DPI = 150


def save_observable_traces(records, path: str | Path) -> None:
    """Energy and magnetization traces of one sampling run."""
    sweeps = [r.sweep for r in records]
    fig, (ax_e, ax_m) = plt.subplots(2, 1, figsize=(7, 5), sharex=True)
    ax_e.plot(sweeps, [r.E_red for r in records], lw=0.8, color="tab:blue")
    ax_e.set_ylabel("reduced energy")
    ax_m.plot(sweeps, [r.M for r in records], lw=0.8, color="tab:red")
    ax_m.set_ylabel("magnetization")
    ax_m.set_xlabel("sweep")
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)


def save_sweep_curves(rows: list[dict], x_key: str, path: str | Path) -> None:
    """|M| and Binder cumulant against the swept axis, one series per L."""
    sizes = sorted({row["L"] for row in rows})
    fig, (ax_m, ax_u) = plt.subplots(1, 2, figsize=(10, 4))
    for L in sizes:
        pts = [row for row in rows if row["L"] == L]
        pts.sort(key=lambda row: row[x_key])
        x = [row[x_key] for row in pts]
        m = [row["mean_absM"] / (row["L"] * row["L"]) for row in pts]
        m_err = [
            (row["stderr_absM"] or 0.0) / (row["L"] * row["L"]) for row in pts
        ]
        u = [row["binder_U"] for row in pts]
        ax_m.errorbar(x, m, yerr=m_err, marker="o", ms=3, lw=1, label=f"L={L}")
        ax_u.plot(x, u, marker="o", ms=3, lw=1, label=f"L={L}")
    ax_m.set_xlabel(x_key)
    ax_m.set_ylabel("|M| per site")
    ax_u.set_xlabel(x_key)
    ax_u.set_ylabel("Binder cumulant")
    ax_u.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
