#!/usr/bin/env python3
"""Tabulate ed(Spin(n)) and ed(GSpin(n)) over a range of n.

Example:
    python scripts/spin_table.py --start 15 --stop 26 --markdown
"""

import argparse
from dataclasses import dataclass

from edcalc import compute_ed, parse


@dataclass
class TableConfig:
    start: int = 15
    stop: int = 26
    markdown: bool = False


def rows(cfg: TableConfig):
    for n in range(cfg.start, cfg.stop + 1):
        if n == 4:
            continue
        r = compute_ed(parse(f"Spin({n})"))
        if r.exact:
            yield n, str(r.ed), str(r.ed_red), "exact"
        else:
            up = "?" if r.upper is None else r.upper
            yield n, f"[{r.lower}, {up}]", "-", "bounds"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--start", type=int, default=15)
    ap.add_argument("--stop", type=int, default=26)
    ap.add_argument("--markdown", action="store_true",
                    help="emit a markdown table instead of aligned text")
    args = ap.parse_args()
    cfg = TableConfig(args.start, args.stop, args.markdown)

    if cfg.markdown:
        print("| n | ed(Spin(n)) | ed(GSpin(n)) | status |")
        print("|---|-------------|--------------|--------|")
        for n, ed, ed_red, status in rows(cfg):
            print(f"| {n} | {ed} | {ed_red} | {status} |")
    else:
        print(f"{'n':>4} {'ed(Spin(n))':>16} {'ed(GSpin(n))':>14} status")
        for n, ed, ed_red, status in rows(cfg):
            print(f"{n:>4} {ed:>16} {ed_red:>14} {status}")


if __name__ == "__main__":
    main()
