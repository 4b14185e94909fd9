"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from cycflat import _kernels
from cycflat.corpus import generate_corpus
from cycflat.lattice import boolean_lattice
from cycflat.witness import build_witness


def workloads():
    corpus = [R.matroid for _, _, R in generate_corpus(6, 4)]
    small = [M for M in corpus if M.n <= 14]
    witness = build_witness(boolean_lattice(3), 0).matroid

    def corpus_flats(k):
        for M in corpus:
            k.cyclic_flats_by_flats(M.n, list(M.flats), list(M.ranks))

    def corpus_subsets(k):
        for M in small:
            k.cyclic_flats_by_subsets(M.n, list(M.flats), list(M.ranks))

    def corpus_rank_tables(k):
        for M in small:
            k.rank_table(M.n, list(M.flats), list(M.ranks))

    def witness_flats(k):
        M = witness
        k.cyclic_flats_by_flats(M.n, list(M.flats), list(M.ranks))

    return {
        f"corpus flat walk ({len(corpus)} matroids)": corpus_flats,
        f"corpus subset scan ({len(small)} matroids, n<=14)": corpus_subsets,
        f"corpus rank tables ({len(small)} matroids, n<=14)": corpus_rank_tables,
        f"B3 witness flat walk (n={witness.n})": witness_flats,
    }


def best_of(fn, kernel, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernel)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels.compiled is None:
        print("compiled extension not available; timing the Python kernel only")
    print(f"{'workload':<52} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in workloads().items():
        py = best_of(fn, _kernels.python, args.repeat)
        if _kernels.compiled is None:
            print(f"{name:<52} {py:>9.3f}s {'-':>10} {'-':>8}")
            continue
        cy = best_of(fn, _kernels.compiled, args.repeat)
        print(f"{name:<52} {py:>9.3f}s {cy:>9.3f}s {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
