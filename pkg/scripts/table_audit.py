"""Audit the transcribed composition tables against the generated ones.

The three tables shipped in quatype.reference_tables were copied from a
typeset source whose anticommutator table is known to carry print damage.
This script lists every cell where the transcription disagrees with the
table derived from the composition rules, so the damage stays visible
instead of silently absorbed.

    python3 scripts/table_audit.py
    python3 scripts/table_audit.py --table generic
"""

import argparse
import sys

from quatype.reference_tables import TABLE_NAMES, compare_table


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--table", choices=list(TABLE_NAMES) + ["all"],
                    default="all")
    args = ap.parse_args(argv)

    names = TABLE_NAMES if args.table == "all" else (args.table,)
    total = 0
    for name in names:
        mismatches = compare_table(name)
        total += len(mismatches)
        print(f"{name}: {len(mismatches)} cell(s) disagree")
        for m in mismatches:
            print(f"  row {str(m.row):>4}  col {str(m.col):>4}  "
                  f"printed {str(m.printed) or '(empty)':>6}  "
                  f"derived {str(m.derived):>6}")
    print(f"\n{total} mismatching cell(s) across {len(names)} table(s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
