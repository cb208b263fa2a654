"""Self-contained SVG line charts for sweep reports."""

from __future__ import annotations

import os
import tempfile

import numpy as np


def sweep_chart(report, path: str, title: str = "sweep", log_log: bool = False) -> None:
    """Plot empirical deviation and theoretical bound against the parameter.

    Uses the observation columns when present (control-system sweeps),
    otherwise the state columns.  The file is written atomically.
    """
    import matplotlib

    matplotlib.use("svg", force=False)
    from matplotlib.figure import Figure

    ok_rows = [r for r in report.rows if r.status == "ok"]
    lams = [float(np.atleast_1d(r.lam)[0]) for r in ok_rows]
    has_z = any(r.dev_z is not None for r in ok_rows)
    dev = [r.dev_z if has_z else r.dev_x for r in ok_rows]
    bound = [r.bound_z if has_z else r.bound_x for r in ok_rows]
    label = "z" if has_z else "x"

    fig = Figure(figsize=(6.0, 4.0))
    ax = fig.add_subplot(111)
    order = np.argsort(lams)
    lam_arr = np.asarray(lams)[order]
    ax.plot(lam_arr, np.asarray(dev)[order], "o-", label=f"sup deviation ({label})")
    ax.plot(lam_arr, np.asarray(bound)[order], "s--", label=f"theoretical bound ({label})")
    if log_log:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel("parameter offset")
    ax.set_ylabel(f"sup-over-time gap of {label}")
    ax.set_title(title)
    ax.grid(True, alpha=0.4)
    ax.legend()
    fig.tight_layout()

    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".svg")
    os.close(fd)
    try:
        fig.savefig(tmp, format="svg", metadata={"Date": None})
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
