"""Run the oracle agreement suites with timings.

``--exhaustive`` sweeps every stratum of the move and normalization suites
instead of sampling the large r = 2 ones; expect minutes to tens of minutes.
"""
import argparse
import sys
import time

from cyclext import oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suites", nargs="*", default=list(oracle.SUITES))
    ap.add_argument("--exhaustive", action="store_true")
    args = ap.parse_args()
    ok = True
    for name in args.suites:
        kwargs = {"exhaustive": True} if args.exhaustive and name in ("moves", "normalize") else {}
        t0 = time.time()
        rep = oracle.SUITES[name](**kwargs)
        ok &= rep.passed
        print(f"{rep.line()}  [{time.time() - t0:.1f}s]", flush=True)
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
