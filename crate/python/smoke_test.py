"""Smoke test for the pykkwcas extension.

Build first, e.g. `maturin develop -m crates/python/Cargo.toml`, or copy
target/release/libpykkwcas.so to pykkwcas.so on PYTHONPATH.
"""

import json
import sys

import pykkwcas


def main() -> int:
    assert pykkwcas.eval("tr( c(dxn) * c(dxn) )") == "-16"
    assert pykkwcas.eval("tr( c(thetap) * c(dxn) )", dim=6) == "-64*thetap_n"
    try:
        pykkwcas.eval("tr(")
    except ValueError as err:
        assert "byte 3" in str(err)
    else:
        raise AssertionError("malformed input must raise")

    assert "kkw4" in pykkwcas.suites()
    text, passed = pykkwcas.verify("kkw4", parallel=2)
    report = json.loads(text)
    assert passed and report["summary"]["failed"] == 0
    total = next(c for c in report["cases"] if c["id"] == "total")
    print(f"kkw4 total: {total['computed']}")
    print(f"a4 vector: {pykkwcas.a4_vector()}")
    print("smoke test ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
