"""Figures drawn from scenario tables. Imported lazily by the CLI only."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 3.8),
    "figure.dpi": 120,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "lines.linewidth": 1.2,
}


def _col(table, name) -> np.ndarray:
    i = table.header.index(name)
    return np.array([float(row[i]) for row in table.rows])


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def _line(table, x, ys, labels, xlabel, ylabel, path, logy=False) -> Path:
    fig, ax = plt.subplots()
    xv = _col(table, x)
    for y, label in zip(ys, labels):
        yv = _col(table, y)
        if logy:
            ax.semilogy(xv, np.abs(yv), label=label)
        else:
            ax.plot(xv, yv, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend()
    return _save(fig, path)


def _by_time(table, path: Path, columns, ylabel: str) -> Path:
    fig, ax = plt.subplots()
    r, dt = _col(table, "r"), _col(table, "delta_t")
    for t in np.unique(dt):
        m = dt == t
        for c, style in zip(columns, ("-", "--", ":")):
            ax.plot(r[m], _col(table, c)[m], style, label=f"{c}, dt={t:g}")
    ax.set_xlabel("r")
    ax.set_ylabel(ylabel)
    ax.legend(ncol=2)
    return _save(fig, path)


def _propagate(tables, out: Path) -> list[Path]:
    t = tables["propagate_grid"]
    return [_by_time(t, out / "propagate_grid.png", ("grid_re", "closed_re"), "Re phi")]


def _hegerfeldt(tables, out: Path) -> list[Path]:
    t = tables["hegerfeldt_branches"]
    fig, ax = plt.subplots()
    r = _col(t, "r")
    for key, label, style in (("plus", "gamma=+1", "-"), ("minus", "gamma=-1", "--"), ("sum", "sum", "-")):
        ax.semilogy(r, np.hypot(_col(t, f"{key}_re"), _col(t, f"{key}_im")), style, label=label)
    ax.set_xlabel("r")
    ax.set_ylabel("|psi|")
    ax.legend()
    return [_save(fig, out / "hegerfeldt_branches.png")]


def _position(tables, out: Path) -> list[Path]:
    t = tables["position_convergence"]
    kind = np.array([row[t.header.index("kind")] for row in t.rows])
    dk, res = _col(t, "delta_k"), _col(t, "residual")
    fig, ax = plt.subplots()
    for name in ("eigen", "commutator"):
        m = kind == name
        ax.loglog(dk[m], res[m], "o-", label=name)
        ax.loglog(dk[m], res[m][0] * (dk[m] / dk[m][0]) ** 2, "k:", lw=0.8)
    ax.set_xlabel("delta_k")
    ax.set_ylabel("relative residual")
    ax.legend(title="dotted: slope 2")
    return [_save(fig, out / "position_convergence.png")]


PLOTTERS = {
    "born-rule": lambda tb, out: [_line(tb["born_density_line"], "x", ("density",), ("rho",), "x", "density",
                                        out / "born_density_line.png")],
    "localize": lambda tb, out: [_line(tb["localize_line"], "x", ("re", "ref_re"), ("grid", "kernel"), "x",
                                       "Re psi", out / "localize_line.png")],
    "propagate": _propagate,
    "hegerfeldt": _hegerfeldt,
    "green": lambda tb, out: [_by_time(tb["green_kernels"], out / "green_kernels.png", ("retarded", "advanced"),
                                       "kernel")],
    "commutators": lambda tb, out: [_line(tb["commutator_line"], "x", ("im",), ("Im [A, E]",), "x", "commutator",
                                          out / "commutator_line.png")],
    "position-op": _position,
}


def render(scenario: str, tables: dict, out) -> list[Path]:
    """Write the scenario's PNG figures into ``out``; scenarios without a plotter give none."""
    plotter = PLOTTERS.get(scenario)
    if plotter is None:
        return []
    with plt.rc_context(STYLE):
        return plotter(tables, Path(out))
