"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick] [--json]

Each row times one kernel call on both backends (best of ``--repeat``)
and checks that the answers agree.
"""
import argparse
import json
import random
import sys
import time

from stablecovers import _kernels
from stablecovers.elliptic import WeierstrassCurve, _log_tables, _tables
from stablecovers.errors import SingularCurve
from stablecovers.field import ff_make

HURWITZ_CASES = [(4, 6), (4, 8), (5, 6), (5, 8)]
HURWITZ_QUICK = [(4, 6), (5, 6)]
FIELDS = [(2, 4), (2, 6), (2, 8), (3, 5), (101, 1)]
FIELDS_QUICK = [(2, 4), (2, 6)]


def _best(fn, repeat):
    best, value = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return best, value


def _curve(F, seed):
    rng = random.Random(seed)
    els = list(F.elements())
    while True:
        try:
            return WeierstrassCurve(*(rng.choice(els) for _ in range(5)))
        except SingularCurve:
            pass


def run(repeat, quick):
    backends = {"python": _kernels.python}
    if _kernels.compiled is not None:
        backends["cython"] = _kernels.compiled
    rows = []
    for d, n in (HURWITZ_QUICK if quick else HURWITZ_CASES):
        row = {"kernel": "count_transitive", "case": f"d={d} n={n}"}
        answers = set()
        for name, kern in backends.items():
            row[name], val = _best(lambda: kern.count_transitive(d, n), repeat)
            answers.add(val)
        row["agree"] = len(answers) == 1
        rows.append(row)
    for p, k in (FIELDS_QUICK if quick else FIELDS):
        F = ff_make(p, k)
        E = _curve(F, p * 31 + k)
        log, exp = _log_tables(F)
        ysq, lin, rhs = _tables(E)
        row = {"kernel": "count_affine_points", "case": f"GF({p}^{k})"}
        answers = set()
        for name, kern in backends.items():
            row[name], val = _best(
                lambda: kern.count_affine_points(p, k, log, exp, ysq, lin, rhs), repeat)
            answers.add(val)
        row["agree"] = len(answers) == 1
        rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small cases only")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    rows = run(args.repeat, args.quick)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'kernel':<22}{'case':<14}{'python s':>12}{'cython s':>12}{'speedup':>10}  agree")
        for r in rows:
            cy = r.get("cython")
            speed = f"{r['python'] / cy:9.1f}x" if cy else "      n/a"
            cys = f"{cy:12.4f}" if cy else f"{'n/a':>12}"
            print(f"{r['kernel']:<22}{r['case']:<14}{r['python']:12.4f}{cys}{speed}  {r['agree']}")
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
