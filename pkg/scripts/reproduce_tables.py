"""Analyze a dataset (bundled corpus by default) and print the worked example and Betti table.

    python scripts/reproduce_tables.py [--input data.cicy] [--jobs N]
"""

import argparse
from collections import defaultdict

from cicyg2 import load_corpus, parse_dataset, render_decorated, run_batch
from cicyg2.pipeline import BatchOptions, format_text


def compress(values):
    """Render same-parity ints as 'a+2k for k=...' with consecutive k collapsed."""
    values = sorted(values)
    base = values[0]
    ks = [(v - base) // 2 for v in values]
    runs = []
    start = prev = ks[0]
    for k in ks[1:]:
        if k != prev + 1:
            runs.append((start, prev))
            start = k
        prev = k
    runs.append((start, prev))
    parts = [str(a) if a == b else f"{a},...,{b}" for a, b in runs]
    return f"{base}+2k for k={','.join(parts)}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--input")
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--expand", action="store_true")
    args = ap.parse_args()

    if args.input:
        with open(args.input) as fh:
            records = parse_dataset(fh.read())
    else:
        records = load_corpus()

    report = run_batch(records, BatchOptions(jobs=args.jobs, expand=args.expand))
    print(format_text(report))

    for res in report.results:
        if res.name == "configex1":
            print("configex1 free involutions")
            for f in res.free_assignments:
                print(render_decorated(f.config, f.assignment, res.hodge))
                print()

    by_b2 = defaultdict(set)
    for pair, _ in report.pair_counts:
        by_b2[pair.b2].add(pair.b3)
    print("b2  b3")
    for b2 in sorted(by_b2):
        print(f"{b2:<3} {compress(by_b2[b2])}")

    hodge_by_h11 = defaultdict(set)
    for res in report.results:
        if res.b_admitting and res.hodge is not None:
            hodge_by_h11[res.hodge.h11].add(res.hodge.h21)
    print()
    print("h11 h21 (records admitting a B involution)")
    for h11 in sorted(hodge_by_h11):
        print(f"{h11:<3} {', '.join(map(str, sorted(hodge_by_h11[h11])))}")


if __name__ == "__main__":
    main()
