"""Measure the payoff of the cached-table route against direct summation.

For each algebra the direct route recomputes the Weyl group on every call,
which is what a user without a table would pay.  The cached route loads the
table once from disk and reconstructs each alternant from it.  Both routes
produce identical polynomials; only the price differs.
"""

import argparse
import itertools
import tempfile
import time

from weylchar.algebra import WeightVec, build_algebra
from weylchar.tables import (
    alternant,
    build_table,
    load_table,
    save_table,
    table_cache_path,
)
from weylchar.weylgroup import alternant_direct

DEFAULT = ["G2", "A3", "B3", "C3", "D4"]


def sample_weights(rank, count):
    top = 4
    while top ** rank < count:
        top += 1
    box = sorted(
        itertools.product(range(top), repeat=rank), key=lambda c: (sum(c), c)
    )
    return [WeightVec.weight(c) for c in box[:count]]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100,
                        help="alternants per route (default 100)")
    parser.add_argument("--algebras", nargs="*", default=DEFAULT,
                        metavar="NAME")
    args = parser.parse_args()

    print(f"{'algebra':>8} {'|W|':>6} {'direct':>10} {'cached':>10} {'ratio':>7}")
    with tempfile.TemporaryDirectory() as cache_dir:
        for name in args.algebras:
            a = build_algebra(name[0], int(name[1:]))
            save_table(build_table(a), cache_dir=cache_dir)
            weights = sample_weights(a.rank, args.count)

            t0 = time.perf_counter()
            table = load_table(table_cache_path(a, cache_dir))
            cached = [alternant(table, w) for w in weights]
            cached_time = time.perf_counter() - t0

            t0 = time.perf_counter()
            direct = [alternant_direct(a, w) for w in weights]
            direct_time = time.perf_counter() - t0

            assert cached == direct
            ratio = direct_time / cached_time
            print(
                f"{a.name:>8} {table.size:>6} {direct_time:>9.3f}s "
                f"{cached_time:>9.3f}s {ratio:>6.1f}x"
            )


if __name__ == "__main__":
    main()
