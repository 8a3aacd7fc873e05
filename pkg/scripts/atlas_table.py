"""Print the extendable cyclic atlas for a range of genera as CSV."""
import argparse
import sys

from cyclext.extendability import ATLAS_COLUMNS, enumerate_atlas


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-genus", type=int, default=2)
    ap.add_argument("--max-genus", type=int, default=10)
    ap.add_argument("--free-only", action="store_true")
    args = ap.parse_args()
    print(",".join(ATLAS_COLUMNS))
    for g in range(args.min_genus, args.max_genus + 1):
        for cls in enumerate_atlas(g, max_order=4 * g + 2 if g == 1 else None,
                                   free_only=args.free_only):
            print(",".join(map(str, (g, *cls.astuple()))))
    return 0


if __name__ == "__main__":
    sys.exit(main())
