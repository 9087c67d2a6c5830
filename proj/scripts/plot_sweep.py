#!/usr/bin/env python3
# Copyright 2026 The qorient Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Log-log plot of a sweep CSV.

    qorient sweep --circuit bv --out bv.csv
    python3 scripts/plot_sweep.py bv.csv bv.png

Gate columns are dashed, circuit columns solid.
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("csv")
    parser.add_argument("png")
    args = parser.parse_args()

    df = pd.read_csv(args.csv)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for col in df.columns[1:]:
        style = "--" if col.startswith("gate_") else "-"
        ax.loglog(df["epsilon"], df[col], style, label=col)
    ax.set_xlabel("systematic over-rotation epsilon")
    ax.set_ylabel("infidelity")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
