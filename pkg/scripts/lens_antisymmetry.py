"""List non-homeomorphic lens spaces that dominate each other via the residue certificate."""
import argparse

from cyclext.lens import domination_digraph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=30)
    args = ap.parse_args()
    total = 0
    for p in range(2, args.max_p + 1):
        dg = domination_digraph(p)
        if dg.mutual_pairs:
            total += len(dg.mutual_pairs)
            pairs = ", ".join(f"{a}<->{b}" for a, b in dg.mutual_pairs)
            print(f"p={p:3d}  classes={len(dg.nodes):3d}  edges={len(dg.edges):4d}  {pairs}")
    print(f"{total} mutual pairs for p <= {args.max_p}")


if __name__ == "__main__":
    main()
