"""Claim catalog: registry shape, selection, result records."""

from __future__ import annotations

import pytest

from cube_faultlab import claim_ids, verify_claims


def test_catalog_is_nonempty_and_ordered():
    ids = claim_ids()
    assert len(ids) == 58
    assert ids[0] == "lem2.2(n=3)"
    assert ids[-1] == "thm3.26(n=5,m=3)"
    assert len(set(ids)) == len(ids)


def test_unknown_ids_rejected():
    with pytest.raises(ValueError, match="unknown claim ids"):
        verify_claims(["nope", "lem2.2(n=3)"])


def test_selection_preserves_request_order():
    results = verify_claims(["thm3.3", "lem2.2(n=3)"])
    assert [r.claim_id for r in results] == ["thm3.3", "lem2.2(n=3)"]


def test_max_n_filters():
    results = verify_claims(max_n=3)
    ids = {r.claim_id for r in results}
    assert "lem2.2(n=3)" in ids
    assert all(r.params["n"] <= 3 for r in results)


def test_records_are_serializable():
    (res,) = verify_claims(["lem2.4(n=3,m=1)"])
    rec = res.to_record()
    assert rec["claim"] == "lem2.4(n=3,m=1)"
    assert rec["params"] == {"n": 3, "m": 1}
    assert rec["expected"] == "2"
    assert rec["computed"] == "2"
    assert rec["status"] == "pass"
    assert rec["witness"] == ["00*", "11*"]
    assert isinstance(rec["seconds"], float)


def test_small_claims_all_pass():
    results = verify_claims(max_n=4)
    assert results, "expected desk-scale claims at n <= 4"
    failed = [r.claim_id for r in results if not r.passed]
    assert failed == []


def test_randomized_claims_are_reproducible():
    a, = verify_claims(["lem3.1(n=5)"])
    b, = verify_claims(["lem3.1(n=5)"])
    assert (a.computed, a.status) == (b.computed, b.status)
