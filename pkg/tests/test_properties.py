"""Cross-cutting guarantees: worker policy and thread-count invariance."""

import numpy as np
import pytest

from qcgirth import catalog
from qcgirth._threads import worker_count
from qcgirth.cli import main
from qcgirth.construct import SelectionStrategy, construct
from qcgirth.oracle import girth_bfs_oracle
from qcgirth.qcfile import render_qc


def test_worker_count_policy(monkeypatch):
    monkeypatch.delenv("QCGIRTH_THREADS", raising=False)
    assert worker_count() >= 1
    monkeypatch.setenv("QCGIRTH_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("QCGIRTH_THREADS", "0")
    assert worker_count() >= 1
    monkeypatch.setenv("QCGIRTH_THREADS", "-2")
    assert worker_count() >= 1
    monkeypatch.setenv("QCGIRTH_THREADS", "four")
    with pytest.raises(ValueError):
        worker_count()


def test_oracle_report_ignores_worker_count(monkeypatch):
    # 900 check rows split across several batches once threads allow it
    H = catalog.THREE_ROW_GIRTH10.bind(300).expand()
    monkeypatch.setenv("QCGIRTH_THREADS", "1")
    serial = girth_bfs_oracle(H)
    monkeypatch.setenv("QCGIRTH_THREADS", "4")
    parallel = girth_bfs_oracle(H)
    assert serial == parallel
    assert serial.girth is not None and serial.witnesses


def test_cli_output_ignores_worker_count(tmp_path, monkeypatch, capsys):
    path = tmp_path / "m.qc"
    path.write_text(render_qc(catalog.THREE_ROW_GIRTH10.bind(300)))
    outputs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("QCGIRTH_THREADS", threads)
        code = main(["girth", str(path)])
        assert code == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_random_strategy_seeds_vary_but_certify():
    rows = set()
    for seed in range(6):
        strategy = SelectionStrategy(kind="random", seed=seed)
        res = construct(2, 5, 12, strategy)
        assert res.target_girth == 12 and res.n_min >= 2
        rows.add(tuple(res.matrix.rows[1]))
    # gappy forbidden sets leave room for the draws to differ
    assert len(rows) > 1
