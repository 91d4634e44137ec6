"""Transversal censuses: GL(3,2) double cosets on F_8, Singer normalizer classes for prime N-1."""

from __future__ import annotations

import argparse

from chromsurf.census import enumerate_transversal_cosets_d3, singer_normalizer_search
from chromsurf.gf2d import make_field


def show(title, census) -> None:
    print(title)
    for cl in census.classes:
        rep = cl.label or str(list(cl.representative.images))
        print(f"  {rep:32s} size {cl.size:5d}  transversal {cl.is_transversal}  orientable {cl.orientable}")
    print(f"  {len(census.classes)} classes, {len(census.transversal)} transversal")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--degrees", type=int, nargs="*", default=[3, 5, 7])
    a = p.parse_args()
    show("PG(8) double cosets", enumerate_transversal_cosets_d3())
    for d in a.degrees:
        show(f"PG({2 ** d}) Singer normalizer", singer_normalizer_search(make_field(d)))


if __name__ == "__main__":
    main()
