"""Smoke test for the compiled `longcycle` module: python python/smoke_test.py"""

from fractions import Fraction

import longcycle

K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
BOWTIE = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]


def main():
    num, den, witness = longcycle.mad(BOWTIE)
    assert Fraction(num, den) == Fraction(12, 5), (num, den)
    assert witness == [0, 1, 2, 3, 4]

    r = longcycle.solve(K4, 0)
    assert r["answer"] == "yes" and r["threshold_len"] == 4
    assert list(r)[:5] == ["answer", "k", "mad", "threshold_len", "cycle"]
    assert longcycle.verify_cycle(K4, r["cycle"], r["threshold_len"])

    r = longcycle.solve(K4, 2)
    assert r["answer"] == "no" and r["cycle"] is None

    r = longcycle.solve(K4, 1, path=True)
    assert r["answer"] == "yes" and len(r["path"]) == 4

    assert not longcycle.verify_cycle(K4, [0, 1, 2], 4)
    assert longcycle.oracle_longest_cycle(BOWTIE)[0] == 3

    n, edges = longcycle.parse("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n", "dimacs")
    assert (n, sorted(edges)) == (3, [(0, 1), (0, 2), (1, 2)])

    n, edges = longcycle.gadget([(0, 1), (1, 2), (2, 3), (3, 0)])
    assert (n, len(edges)) == (12, 16)

    n, edges, meta = longcycle.generate("gnp2c", seed=3, n=10, prob=0.5)
    assert n == 10 and meta["family"] == "gnp2c"
    r = longcycle.solve(edges, 1, n=n)
    if r["answer"] == "yes":
        assert longcycle.verify_cycle(edges, r["cycle"], r["threshold_len"], n=n)

    for bad in (lambda: longcycle.solve(BOWTIE, 1), lambda: longcycle.solve(K4, 0, mode="loose"),
                lambda: longcycle.generate("nope")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    print("smoke test passed")


if __name__ == "__main__":
    main()
