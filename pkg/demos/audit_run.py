"""Run a small certification audit and persist its artifacts.

Audits every twin-free tree up to 10 vertices at each instance's own
degree bound, writes the per-instance CSV and the JSON summary next to
this script, and prints the headline numbers.
"""

from pathlib import Path

from iocodes import audit_trees
from iocodes.audit import records_to_csv, summary_to_json

OUT = Path(__file__).resolve().parent


def main():
    records, summary = audit_trees(10)
    (OUT / "tree_audit.csv").write_text(records_to_csv(records))
    (OUT / "tree_audit_summary.json").write_text(summary_to_json(summary))

    print(f"audited {summary['instances']} twin-free trees up to n=10")
    print(f"bound violations: {summary['violations']} (zero expected)")
    print(f"exceptional subdivided stars: {summary['exceptional']}")
    print(f"instances meeting the bound exactly: {summary['extremal']}")
    print(f"runtime: {summary['runtime_s']}s")
    print(f"wrote {OUT / 'tree_audit.csv'} and {OUT / 'tree_audit_summary.json'}")

    extremal = [r for r in records if r.is_extremal]
    if extremal:
        print("\nextremal rows:")
        for r in extremal:
            print(f"  {r.graph6:12s} n={r.n} delta={r.delta} gamma={r.gamma}")


if __name__ == "__main__":
    main()
