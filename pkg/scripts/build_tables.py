"""Build and cache the reconstruction tables for every supported algebra.

Run once per machine; afterwards every character computation starts from the
disk cache.  Algebras beyond the enumeration envelope are reported and
skipped.
"""

import argparse
import time

from weylchar.algebra import build_algebra
from weylchar.errors import EnvelopeError
from weylchar.tables import build_table, default_cache_dir, save_table

DEFAULT = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
           "D4", "D5", "F4", "G2"]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--cache-dir", default=None,
        help="target directory (default: the library cache dir)",
    )
    parser.add_argument(
        "--algebras", nargs="*", default=DEFAULT, metavar="NAME",
        help=f"labels to build (default: {' '.join(DEFAULT)})",
    )
    args = parser.parse_args()
    cache_dir = args.cache_dir or default_cache_dir()

    for name in args.algebras:
        a = build_algebra(name[0], int(name[1:]))
        t0 = time.perf_counter()
        try:
            table = build_table(a)
        except EnvelopeError as exc:
            print(f"{a.name:>4}  skipped: {exc}")
            continue
        path = save_table(table, cache_dir=cache_dir)
        elapsed = time.perf_counter() - t0
        print(f"{a.name:>4}  {table.size:>6} entries  {elapsed:7.2f} s  {path}")


if __name__ == "__main__":
    main()
