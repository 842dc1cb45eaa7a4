import logging

from src.GENERAL.get import get_parameter

KEYS = ("n_nodes", "lambda_s")


def test_get_parameter_single_key():
    failures = []
    assert get_parameter("network", KEYS, {"network": {"lambda_s": "1e-6"}}, failures) == ("lambda_s", "1e-6")
    assert failures == []


def test_get_parameter_conflict():
    failures = []
    doc = {"network": {"n_nodes": "1", "lambda_s": "1e-6"}}
    assert get_parameter("network", KEYS, doc, failures) is None
    assert len(failures) == 1
    assert "n_nodes, lambda_s" in failures[0]


def test_get_parameter_missing_levels(caplog):
    caplog.set_level(logging.DEBUG)
    failures = []
    assert get_parameter("network", KEYS, {}, failures, level=logging.CRITICAL) is None
    assert len(failures) == 1

    assert get_parameter("network", KEYS, {}, failures, level=logging.INFO) is None
    assert get_parameter("network", KEYS, {}, failures, level=logging.NOTSET) is None
    assert len(failures) == 1
    assert "[network]" in caplog.text
