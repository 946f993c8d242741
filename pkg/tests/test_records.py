import numpy as np

from hullprobe.experiments.records import (
    csv_dumps,
    jsonl_dumps,
    read_jsonl,
    write_csv,
    write_jsonl,
)


def test_jsonl_round_trip(tmp_path):
    records = [{"b": 2, "a": 1.5}, {"a": None, "b": [1, 2]}]
    path = tmp_path / "r.jsonl"
    write_jsonl(path, records)
    assert read_jsonl(path) == records


def test_jsonl_is_key_sorted_and_newline_terminated():
    text = jsonl_dumps([{"z": 1, "a": 2}])
    assert text == '{"a": 2, "z": 1}\n'


def test_csv_with_comment_header(tmp_path):
    rows = [{"x": 1, "y": 0.1}, {"x": 2, "y": 0.25}]
    text = csv_dumps(["x", "y"], rows, header_comment="config: seed=1")
    lines = text.splitlines()
    assert lines[0] == "# config: seed=1"
    assert lines[1] == "x,y"
    assert lines[2] == "1,0.1"
    path = tmp_path / "t.csv"
    write_csv(path, ["x", "y"], rows, header_comment="config: seed=1")
    assert path.read_text(encoding="utf-8") == text


def test_csv_floats_keep_full_precision():
    val = 1.0 / 3.0
    text = csv_dumps(["v"], [{"v": val}])
    assert repr(val) in text
    assert float(text.splitlines()[1]) == val


def test_numpy_scalars_serialize():
    text = csv_dumps(["v", "n", "b"], [{"v": np.float64(0.5), "n": np.int64(3), "b": np.bool_(True)}])
    assert text.splitlines()[1] == "0.5,3,True"
    line = jsonl_dumps([{"v": np.float64(0.5), "n": np.int64(3), "a": np.arange(2)}])
    assert line == '{"a": [0, 1], "n": 3, "v": 0.5}\n'
