import json

import pytest

from transguard.config import ConfigError, flatten, load_config, merge, pipeline_config
from transguard.rules import PruneMode, Rule


def write(tmp_path, data):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return path


def test_nested_and_dotted_agree():
    assert flatten({"prune": {"mode": "match"}}) == flatten({"prune.mode": "match"}) == {"prune.mode": "match"}


def test_dashes_become_underscores():
    assert flatten({"arr-threshold": 2}) == {"arr_threshold": 2}


def test_load(tmp_path):
    values = load_config(write(tmp_path, {"rules": "r1,r4", "collapse": {"number_run": 20}, "lenient": True}))
    cfg = pipeline_config(values)
    assert cfg.rules == {Rule.R1_CONTEXT, Rule.R4_PRUNE}
    assert cfg.thresholds.number_run == 20 and cfg.lenient


def test_none_path():
    assert load_config(None) == {}


@pytest.mark.parametrize("data,message", [
    ({"nope": 1}, "unknown config key"),
    ({"arr_threshold": "2"}, "wrong type"),
    ({"lenient": 1}, "wrong type"),
    ({"arr_threshold": True}, "wrong type"),
    ("[1, 2]", "JSON object"),
    ("{not json", "not valid JSON"),
])
def test_bad_files(tmp_path, data, message):
    with pytest.raises(ConfigError, match=message):
        load_config(write(tmp_path, data))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(tmp_path / "absent.json")


def test_flags_win():
    merged = merge({"rules": "r1", "arr_threshold": 2}, {"rules": "r4", "arr_threshold": None})
    assert merged == {"rules": "r4", "arr_threshold": 2}


def test_bad_values():
    with pytest.raises(ConfigError):
        pipeline_config({"prune.mode": "greedy"})
    with pytest.raises(ConfigError):
        pipeline_config({"rules": "r7"})


def test_defaults():
    cfg = pipeline_config({})
    assert cfg.rules == frozenset(Rule) and cfg.prune.mode is PruneMode.COUNT and cfg.arr_threshold == 1
