from __future__ import annotations

import pytest

from edgering.errors import InvalidSpec
from edgering.graph import MultiPathSpec
from edgering.resolution import pdim_of
from edgering.toric import MonomialOrder
from edgering.verify import PASS, SOFT_FAIL, Check, VerificationReport, resolve_orders, verify


def S(text: str) -> MultiPathSpec:
    return MultiPathSpec.parse(text)


def statuses(report):
    return {c.name: c.status for c in report.checks}


def test_k23_exhaustive():
    report = verify(S("2,2,2"), "exhaustive")
    assert report.passed
    assert statuses(report) == dict.fromkeys(["H3", "H1", "H2", "H4", "H5", "H6", "S1"], PASS)
    assert report.best.table.totals() == [1, 3, 2]
    assert sum(len(r.orders) for r in report.runs) == 2 * 720


@pytest.mark.parametrize("text,mode", [("2,2,3,3", "blocks"), ("2,4", "exhaustive"),
                                       ("3,3,5", "blocks"), ("2,2,3", "blocks"),
                                       ("2,4,2,3,3", "sampled:6:1")])
def test_pipeline_passes(text, mode):
    report = verify(S(text), mode)
    assert report.passed, [c for c in report.checks if c.status != PASS]
    assert report.check("S1").status == PASS


def test_trivial_spec():
    report = verify(S("2,3"), "blocks")
    assert report.passed
    assert pdim_of(report.best.table) == 0


def test_orders_sharing_an_ideal_share_a_run():
    report = verify(S("2,2"), "blocks")
    assert len(report.runs) == 2
    assert sum(len(r.orders) for r in report.runs) == 3 * 2 * 4


def test_resolve_orders():
    spec = S("2,2,3")
    assert len(resolve_orders(spec, "sampled:5:2")) == 7
    assert resolve_orders(spec, "sampled:5:2") == resolve_orders(spec, "sampled:5:2")
    assert resolve_orders(spec, "sampled")[0] == MonomialOrder.natural(spec)
    with pytest.raises(InvalidSpec):
        resolve_orders(spec, "random")


def test_explicit_order_list():
    spec = S("2,2,2")
    report = verify(spec, [MonomialOrder.natural(spec, "grevlex")])
    assert report.passed and len(report.runs) == 1


def test_soft_failures_only_count_when_strict():
    report = VerificationReport(S("2,2"), None,
                                [Check("H1", PASS), Check("S1", SOFT_FAIL, hard=False)])
    assert report.passed
    report.strict = True
    assert not report.passed
