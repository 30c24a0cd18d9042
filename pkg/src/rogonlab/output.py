"""Deterministic CSV/JSON writers and generated plot scripts.

CSV is the canonical data format (LF line endings, UTF-8, floats printed with
shortest round-trip formatting); JSON carries metadata only.  Every data file
is paired with a manifest sufficient to regenerate it.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

FIELD_CSV_HEADER = "S,t,re_sigma,im_sigma,re_psi,im_psi,I_sigma,I_psi"


def fmt(x) -> str:
    """Shortest decimal string that round-trips the 64-bit float."""
    return repr(float(x))


def write_field_csv(path, S, t, sigma, psi) -> None:
    """Field grid rows, t-major (outer loop t, inner loop S)."""
    S = np.atleast_1d(S)
    t = np.atleast_1d(t)
    sigma = np.atleast_2d(sigma)
    psi = np.atleast_2d(psi)
    lines = [FIELD_CSV_HEADER]
    for i in range(t.size):
        ti = fmt(t[i])
        for j in range(S.size):
            sg = sigma[i, j]
            ps = psi[i, j]
            lines.append(
                ",".join(
                    (
                        fmt(S[j]),
                        ti,
                        fmt(sg.real),
                        fmt(sg.imag),
                        fmt(ps.real),
                        fmt(ps.imag),
                        fmt(sg.real**2 + sg.imag**2),
                        fmt(ps.real**2 + ps.imag**2),
                    )
                )
            )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_series_csv(path, columns, rows) -> None:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(fmt(row[c]) for c in columns))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_manifest(path, command: str, params: dict, outputs: list[str], duration_s: float, **extra) -> None:
    from . import __version__

    doc = {
        "tool": "rogonlab",
        "version": __version__,
        "command": command,
        "params": params,
        "outputs": sorted(str(o) for o in outputs),
        "duration_s": duration_s,
    }
    doc.update(extra)
    Path(path).write_text(
        json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8", newline="\n"
    )


_SLICE_STYLES = ["-", "--", "-."]


def slice_plot_script(csv_names: list[str], times: list[float], title: str) -> str:
    """Standalone matplotlib script for intensity-vs-S slices, styled
    solid / dashed / dash-dot in listed-time order."""
    pairs = ",\n    ".join(
        f'("{name}", {time!r}, "{_SLICE_STYLES[i % len(_SLICE_STYLES)]}")'
        for i, (name, time) in enumerate(zip(csv_names, times))
    )
    return f'''#!/usr/bin/env python3
"""Generated slice plot; run next to the slice CSV files."""
import csv

import matplotlib.pyplot as plt

SLICES = [
    {pairs},
]

fig, axes = plt.subplots(1, 2, figsize=(10, 4))
for name, time, style in SLICES:
    with open(name, newline="") as fh:
        rows = list(csv.DictReader(fh))
    S = [float(r["S"]) for r in rows]
    for ax, col in zip(axes, ("I_sigma", "I_psi")):
        ax.plot(S, [float(r[col]) for r in rows], style, label=f"t={{time}}")
for ax, col in zip(axes, ("$|\\\\sigma|^2$", "$|\\\\psi|^2$")):
    ax.set_xlabel("S")
    ax.set_ylabel(col)
    ax.legend()
fig.suptitle({title!r})
fig.tight_layout()
fig.savefig("slices.png", dpi=150)
'''


def surface_plot_script(csv_name: str, ns: int, nt: int, title: str) -> str:
    """Standalone matplotlib script for intensity surface + density views."""
    return f'''#!/usr/bin/env python3
"""Generated surface/density plot; run next to {csv_name}."""
import numpy as np
import matplotlib.pyplot as plt

data = np.loadtxt({csv_name!r}, delimiter=",", skiprows=1)
ns, nt = {ns}, {nt}
S = data[:ns, 0]
t = data[::ns, 1]
I_sigma = data[:, 6].reshape(nt, ns)
I_psi = data[:, 7].reshape(nt, ns)

fig = plt.figure(figsize=(10, 8))
for idx, (I, label) in enumerate([(I_sigma, "$|\\\\sigma|^2$"), (I_psi, "$|\\\\psi|^2$")]):
    ax = fig.add_subplot(2, 2, 2 * idx + 1, projection="3d")
    SS, TT = np.meshgrid(S, t)
    ax.plot_surface(SS, TT, I, cmap="viridis", linewidth=0)
    ax.set_xlabel("S"); ax.set_ylabel("t"); ax.set_title(label)
    ax2 = fig.add_subplot(2, 2, 2 * idx + 2)
    im = ax2.pcolormesh(S, t, I, cmap="viridis", shading="auto")
    fig.colorbar(im, ax=ax2)
    ax2.set_xlabel("S"); ax2.set_ylabel("t"); ax2.set_title(label + " density")
fig.suptitle({title!r})
fig.tight_layout()
fig.savefig("surface.png", dpi=150)
'''
