#!/usr/bin/env python3
"""Smoke test for the qseq_py extension module.

Builds are plain cargo artifacts, so the script locates the compiled
cdylib (release preferred), exposes it under the importable module name
and runs the worked chain end to end:

    cargo build --release -p qseq-py
    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def import_qseq_py():
    candidates = [
        REPO_ROOT / "target" / "release" / "libqseq_py.so",
        REPO_ROOT / "target" / "debug" / "libqseq_py.so",
    ]
    lib = next((c for c in candidates if c.exists()), None)
    if lib is None:
        sys.exit(
            "libqseq_py.so not found; run `cargo build --release -p qseq-py` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="qseq_py_"))
    shutil.copy2(lib, stage / "qseq_py.so")
    sys.path.insert(0, str(stage))
    import qseq_py

    return qseq_py


def main():
    q = import_qseq_py()

    # Polynomial construction, both encodings, and basic arithmetic.
    f = q.BitPoly("x^3+x^2+1")
    assert str(f) == "x^3+x^2+1"
    assert f.hex() == "0xd"
    assert q.BitPoly("0xd") == f
    assert f.degree() == 3
    assert (q.BitPoly("x+1") + q.BitPoly("x+1")).degree() is None
    product = q.BitPoly("x^3+x+1") * f
    assert product.hex() == "0x7f"
    assert f.is_irreducible()
    assert not q.BitPoly("x^2+1").is_irreducible()

    # Classification and the transform.
    t = q.classify(f)
    assert (t.letter, t.n, t.l, t.m) == ("C", 3, 0, 3)
    g = q.q_transform(f)
    assert g.hex() == "0x7f"
    assert g.is_self_reciprocal()

    # Reciprocal-pair splitting, canonical order.
    g1, g2 = q.split_reciprocal_pair(g, 3)
    assert str(g1) == "x^3+x+1"
    assert str(g2) == "x^3+x^2+1"
    assert g2 == g1.reciprocal()

    # The worked sequence: degrees 3,3,6,6,12,24 with the break at s=3.
    record = json.loads(q.sequence_json("0xd", 6))
    assert [term["degree"] for term in record["terms"]] == [3, 3, 6, 6, 12, 24]
    assert record["s"] == 3
    assert record["seed"] == "0xd"
    assert record["terms"][1]["hex"] == "0xb"
    assert record["terms"][2]["hex"] == "0x49"
    assert record["terms"][3]["type"]["letter"] == "A"
    assert all(term["type"]["letter"] == "A" for term in record["terms"][3:])

    # Determinism across rng seeds.
    assert q.sequence_json("0xd", 6, 1) == q.sequence_json("0xd", 6, 0)

    # Theorem suites at a quick degree.
    suites = q.verify_suites(6)
    assert len(suites) == 8
    for name, passed, checked, counterexamples in suites:
        assert passed, f"suite {name} failed with {counterexamples} counterexamples"

    # Graph exports.
    dot = q.theta_graph_dot(2)
    assert dot.startswith("digraph theta_n2 {")
    assert '"inf" -> "inf" [style=bold, color=red];' in dot
    graph = json.loads(q.theta_graph_json(3, "x^3+x+1"))
    assert graph["n"] == 3
    assert len(graph["points"]) == 9
    assert graph["points"][0]["successor"] == "inf"

    print("smoke test passed")


if __name__ == "__main__":
    main()
