import csv
import enum
import json
import os
import typing as T

from .. import __version__

Row = T.Sequence[T.Any]

PLOT_SCRIPT = '''"""Renders the achievable (R, D) regions written by `otdrsense region`. Generated file."""
import csv
import os
import sys

import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "{csv_name}")
with open(path) as f:
    rows = list(csv.DictReader(line for line in f if not line.startswith("#")))

fig, ax = plt.subplots()
for strategy, color, label in (("quantum", "#a1d99b", "quantum receivers"),
                               ("classical", "#31a354", "classical receivers")):
    boundary = sorted((float(r["R_bits"]), float(r["D_nats"])) for r in rows
                      if r["strategy"] == strategy and r["provenance"] == "time_share")
    R = [0.0] + [p[0] for p in boundary] + [boundary[-1][0]]
    D = [0.0] + [p[1] for p in boundary] + [0.0]
    ax.fill(R, D, color=color, label=label)
    corners = [(float(r["R_bits"]), float(r["D_nats"])) for r in rows
               if r["strategy"] == strategy and r["provenance"] in ("detection_optimal", "rate_optimal")]
    ax.scatter([c[0] for c in corners], [c[1] for c in corners], color="black", s=12, zorder=3)
ax.set_xlabel("R (bits per channel use)")
ax.set_ylabel("D (nats per channel use)")
ax.legend()
fig.savefig(os.path.join(here, "region.png"), dpi=150)
'''


def format_value(value: T.Any) -> str:
    if value is None:
        return ""
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))
    if hasattr(value, "item"):
        return format_value(value.item())
    return str(value)


def write_csv(folder: str, name: str, columns: T.Sequence[str], rows: T.Iterable[Row],
              metadata: T.Optional[T.Dict[str, T.Any]] = None) -> str:
    """CSV preceded by '# key: value' metadata lines; floats are written with repr so they round-trip."""
    os.makedirs(folder, exist_ok=True)
    path = os.path.join(folder, name)
    with open(path, "w", newline="") as f:
        f.write(f"# otdrsense version: {__version__}\n")
        for key, value in (metadata or {}).items():
            f.write(f"# {key}: {format_value(value)}\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
    return path


def write_json(folder: str, name: str, data: T.Any) -> str:
    os.makedirs(folder, exist_ok=True)
    path = os.path.join(folder, name)
    with open(path, "w") as f:
        json.dump(data, f, indent=2, sort_keys=True, default=format_value)
        f.write("\n")
    return path


def write_plot_script(folder: str, csv_name: str = "region.csv", name: str = "plot_region.py") -> str:
    os.makedirs(folder, exist_ok=True)
    path = os.path.join(folder, name)
    with open(path, "w") as f:
        f.write(PLOT_SCRIPT.format(csv_name=csv_name))
    return path
