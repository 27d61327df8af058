"""Contact class of each tabulated pseudo-Anosov monodromy from its nice diagram.

    python3 demos/table_rows.py              # rows with fewer than 84 regions
    python3 demos/table_rows.py --all        # every row, a few minutes
"""
import argparse
import json
import os
import time

from obcontact.heegaard import hat_summary, region_list

TABLE = os.path.join(os.path.dirname(__file__), "..", "tests", "golden", "contact_table.json")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--all", action="store_true")
    a = ap.parse_args()
    with open(TABLE) as fh:
        rows = json.load(fh)
    for row in rows:
        rl = region_list(*row["matrix"])
        if len(rl) >= 84 and not a.all:
            continue
        t = time.time()
        s = hat_summary(rl)
        mark = "ok" if s["contact_vanishes"] is row["vanishes"] else "MISMATCH"
        print("%-18s regions %3d  gens %6d  vanishes %-5s  %5.1fs  %s" % (
            row["matrix"], len(rl), s["component_generators"], s["contact_vanishes"], time.time() - t, mark))


if __name__ == "__main__":
    main()
