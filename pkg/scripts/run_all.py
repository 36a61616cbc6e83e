#!/usr/bin/env python3
"""Run every scenario through the CLI and summarize the pass/fail results.

Reports land in out/ next to this script (JSON, plus the two-slit CSV).
"""

import json
import sys
from pathlib import Path

from algq.cli import main as cli

OUT = Path(__file__).resolve().parent.parent / "out"

RUNS = [
    ("chsh-exact", ["chsh", "--exact"]),
    ("chsh-sampled", ["chsh", "--sampled", "--samples", "1000000", "--seed", "0", "--classical"]),
    ("ks", ["ks"]),
    ("two-slit", ["two-slit"]),
    ("oscillator", ["oscillator"]),
    ("epr", ["epr", "--direction", "0,0,1", "--outcome", "0.5"]),
    ("two-level", ["two-level", "--samples", "1000000", "--seed", "0"]),
    ("gns-demo", ["gns-demo"]),
]


def main() -> int:
    OUT.mkdir(exist_ok=True)
    failures = 0
    for name, args in RUNS:
        out_path = OUT / f"{name}.json"
        code = cli(args + ["--out", str(out_path)])
        verdict = "ok" if code == 0 else "FAILED"
        print(f"{name:<14} {verdict}  -> {out_path}")
        failures += code != 0
    cli(["two-slit", "--format", "csv", "--out", str(OUT / "two-slit.csv")])
    print(f"two-slit CSV   -> {OUT / 'two-slit.csv'}")

    summary = {
        name: json.loads((OUT / f"{name}.json").read_text())["passed"]
        for name, _ in RUNS
    }
    (OUT / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    print("all passed" if failures == 0 else f"{failures} scenario(s) failed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
