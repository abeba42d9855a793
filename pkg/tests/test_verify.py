import json

import pytest

from multizagreb.families import star, t_a_nk2, t_nks
from multizagreb.indices import pi1, pi2
from multizagreb.transforms import move_pendants
from multizagreb.tree import canonical_code, parse_tree_line
from multizagreb.verify import (
    CLAIM_IDS,
    DOCUMENTED,
    FAIL,
    PASS,
    Scan,
    extremal_scan,
    run_verification,
    verify_claim,
)


def _cell(reports, gamma):
    return next(r for r in reports if r.gamma == gamma)


def test_gamma2_cell_n10_k2():
    cell = _cell(extremal_scan(10, 2), 2)
    assert cell.min_pi1 == 2304
    expected = sorted({canonical_code(t_a_nk2(10, 2, a)).hex() for a in (1, 2)})
    assert len(expected) == 2
    assert cell.min_pi1_codes == expected
    assert cell.max_pi2_codes == expected
    assert cell.status == PASS


def test_gamma3_cell_n9_k2():
    cell = _cell(extremal_scan(9, 2), 3)
    assert cell.min_pi1 == 9216 == 4**5 * 3**2
    assert cell.min_pi1_codes == [canonical_code(t_nks(9, 2, 3)).hex()]
    assert cell.count == 1


def test_gamma1_cell_documents_printed_bound():
    cell = _cell(extremal_scan(7, 2), 1)
    assert cell.min_pi1 == 36
    assert cell.printed_bound_pi1 == 49
    assert cell.min_pi1_codes == [canonical_code(star(7)).hex()]
    assert cell.status == DOCUMENTED
    assert cell.count == 11 - sum(r.count for r in extremal_scan(7, 2) if r.gamma != 1)


def test_claim_examples():
    assert verify_claim("lemma24", 12, 4).status == PASS
    assert verify_claim("lemma26", 12, 2, kmin=2).status == PASS
    rep = verify_claim("thm_gamma1", 7, 2)
    assert rep.status == DOCUMENTED and rep.violations == 0


def test_unknown_claim():
    with pytest.raises(KeyError):
        verify_claim("lemma99", 5, 2)


@pytest.mark.parametrize("claim", [c for c in CLAIM_IDS if c != "lemma23"])
def test_every_other_claim_holds_to_n9(claim):
    assert verify_claim(claim, 9, 3).status in (PASS, DOCUMENTED)


def test_printed_lemma23_fails_with_recheckable_counterexamples():
    rep = verify_claim("lemma23", 8, 1)
    assert rep.status == FAIL and rep.counterexamples
    for ce in rep.counterexamples:
        t = parse_tree_line(ce["tree"])
        u, v = int(ce["values"]["u"]), int(ce["values"]["v"])
        gp, gpp = move_pendants(t, u, v)
        assert str(pi1(t)) == ce["values"]["pi1"]
        assert not (max(pi1(gp), pi1(gpp)) < pi1(t) and min(pi2(gp), pi2(gpp)) > pi2(t))


def test_scan_shards_do_not_change_results():
    with Scan(3, jobs=1) as a, Scan(3, jobs=3) as b:
        ra, rb = a.records(12), b.records(12)
        assert b._pool is not None
    assert [r.code for r in ra] == [r.code for r in rb]
    assert [(r.pi1, r.pi2, r.gammas) for r in ra] == [(r.pi1, r.pi2, r.gammas) for r in rb]


def test_report_json_schema_and_determinism():
    claims = ["lemma24", "thm_gamma1", "thm_gamma2", "lemma23"]
    one = run_verification(claims, 9, 2, jobs=1)
    two = run_verification(claims, 9, 2, jobs=2)
    assert one.to_json() == two.to_json()
    assert one.failed
    doc = json.loads(one.to_json())
    assert set(doc) == {"version", "params", "claims", "extremal"}
    cell = doc["extremal"][0]
    assert isinstance(cell["min_pi1"], str) and int(cell["min_pi1"]) > 0
    int(cell["min_pi1_codes"][0], 16)
    for claim in doc["claims"]:
        if claim["status"] == FAIL:
            assert claim["counterexamples"]
    csv_lines = one.to_csv().splitlines()
    assert csv_lines[0].startswith("kind,id")
    assert len(csv_lines) == 1 + len(doc["claims"]) + len(doc["extremal"])
