from __future__ import annotations

import pytest

from pmtools import pmt
from pmtools.catalog import build
from pmtools.natural import natural_matroid


def test_round_trip(tmp_path):
    for nm in ("A4", "S:3", "MK4"):
        p = build(nm)
        path = tmp_path / "p.pmt"
        pmt.write(p, path)
        q = pmt.read(path)
        assert q == p and q.k == p.k


def test_groups_line_is_ignored_on_read():
    lm = natural_matroid(build("L2"))
    text = pmt.dumps(lm.matroid, lm.groups)
    assert "groups: e0=[0,1] e1=[2] e2=[3]" in text
    assert pmt.loads(text) == lm.matroid


def test_format_errors():
    with pytest.raises(pmt.PmtFormatError):
        pmt.loads("")
    with pytest.raises(pmt.PmtFormatError):
        pmt.loads("pmt 1\n0 0\n")
    with pytest.raises(pmt.PmtFormatError):
        pmt.loads("pmt 1\n1 1\n0 0\n")
    with pytest.raises(pmt.PmtFormatError):
        pmt.loads("pmx 1\n0 0\n1 1\n")
