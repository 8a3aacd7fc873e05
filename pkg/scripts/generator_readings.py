"""Where do the per-point and uniform-sign readings of the generator criterion differ?

For every standard form up to a genus bound, compare the number of generator
classes under the two readings and print the forms where they disagree.
"""
import argparse

from cyclext.conjugacy import count_generator_classes, readings_disagree
from cyclext.extendability import enumerate_atlas, standard_epimorphism


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=12)
    args = ap.parse_args()
    seen = differ = 0
    for g in range(2, args.max_genus + 1):
        for cls in enumerate_atlas(g):
            sig, spec = standard_epimorphism(cls)
            seen += 1
            extra = readings_disagree(sig, spec)
            if extra:
                differ += 1
                print(f"g={g:2d} class={cls}  per-point={count_generator_classes(sig, spec)}  "
                      f"uniform={count_generator_classes(sig, spec, uniform=True)}  "
                      f"extra units={extra}")
    print(f"{differ} of {seen} standard forms separate the two readings")


if __name__ == "__main__":
    main()
