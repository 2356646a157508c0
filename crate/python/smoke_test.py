#!/usr/bin/env python3
"""Smoke test for the pq_py extension module.

Build the extension first, then run this script:

    cargo build -p pq-py
    python3 python/smoke_test.py
"""

import pathlib
import shutil
import sys
import sysconfig
import tempfile

REPO = pathlib.Path(__file__).resolve().parent.parent


def import_pq_py():
    try:
        import pq_py  # already importable (e.g. installed build)

        return pq_py
    except ImportError:
        pass
    candidates = [
        REPO / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libpq_py.so", "libpq_py.dylib", "pq_py.dll")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("extension not built; run `cargo build -p pq-py` first")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="pq_py_"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(built, stage / f"pq_py{suffix}")
    sys.path.insert(0, str(stage))
    import pq_py

    return pq_py


def main():
    pq = import_pq_py()

    # the worked product example
    w = pq.Path("yxxyxy")
    u = pq.Path("xyxyyx")
    assert str(w.product(u)) == "xxyxyy"
    assert str(w.oplus(u)) == "yxxyyx"
    assert w.product(u).descents() == 1

    # dimension mismatches surface as ValueError
    try:
        pq.Path("xy").product(pq.Path("xxyy"))
    except ValueError:
        pass
    else:
        raise AssertionError("expected a ValueError for mismatched dimensions")

    # idempotency and the geometric test agree
    assert not pq.Path("xyxy").is_idempotent()
    assert not pq.Path("xyxy").is_upper_zigzag()
    assert pq.Path("xyxy").is_nilpotent()
    assert pq.Path("yxyx").is_idempotent()
    for p in pq.enumerate_paths(4, 4):
        assert p.is_idempotent() == p.is_upper_zigzag()

    # maps and factorization
    assert pq.Path("yxxxyxyyxy").to_map() == ([0, 1, 1, 1, 2, 4], 5)
    assert str(pq.path_from_map([0, 1, 1, 1, 2, 4], 5)) == "yxxxyxyyxy"
    left, right, d = pq.Path("xxyxyy").factorize()
    assert (str(left), str(right), d) == ("xxyx", "yxyy", 1)

    # interval systems and the three-letter encoding
    e = pq.Path("xyyxyxxy").emmentaler()
    assert str(e) == "0-1;2-2;3-4"
    assert e.zigzag() == "1m11m"
    assert e.maps() == ([0, 0, 2, 3, 3], [1, 1, 2, 4, 4])
    assert str(pq.emmentaler_from_zigzag("1m11m").path()) == "xyyxyxxy"
    assert str(pq.Emmentaler("0-0;1-1;2-2").path()) == "yxyx"

    # counting: Fibonacci, Catalan, refined classes
    assert [pq.count_idempotents(n) for n in range(6)] == [1, 2, 5, 13, 34, 89]
    assert pq.count_idempotents(10) == 10946
    assert pq.count_monotone_idempotents(4) == 21
    assert pq.count_idempotents_by_top(2, 1) == 1
    assert pq.count_nilpotents(5) == 42
    assert pq.fibonacci(9) == 34
    assert pq.catalan(3) == 5
    assert pq.binomial(8, 2) == 28
    assert pq.binomial(200, 100) == (
        90548514656103281165404177077484163874504589675413336841320
    )
    assert pq.count_preimages(pq.Path("xxyxyy"), 3) == 28
    assert round(pq.psi_closed_form(7)) == 610

    # enumeration agrees with the counts
    assert len(pq.enumerate_idempotents(4)) == 34
    assert len(pq.enumerate_paths(3, 3)) == 20
    assert sorted(str(p) for p in pq.enumerate_idempotents(2)) == [
        "xxyy",
        "xyyx",
        "yxxy",
        "yxyx",
        "yyxx",
    ]

    # the oracle suite runs from Python too
    results = pq.verify_suite(n=3, oracle_cap=2)
    assert len(results) == 27
    assert all(passed for _, passed in results), results

    print("smoke test: all assertions passed")


if __name__ == "__main__":
    main()
