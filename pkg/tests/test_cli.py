import io
import json
import shutil
import subprocess

import pytest

from olc.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    text = out.getvalue()
    return code, (json.loads(text) if text else None), err.getvalue()


def test_compute_laguerre_two_two():
    code, env, _ = call("compute", "--family", "laguerre", "--param", "alpha=0", "--n", "2,2")
    assert code == 0
    # 2 (alpha + 1)(alpha + 2) at alpha = 0
    assert env["value"] == {"re": "4/1", "im": "0/1"}
    assert set(env) == {"command", "inputs", "value", "verdicts", "notes", "elapsed_ms"}
    assert env["inputs"]["family"] == "laguerre"


def test_compute_with_check():
    code, env, _ = call("compute", "--family", "meixner", "--param", "beta=3/2", "--param", "c=1/3", "--n", "2,1,1", "--check")
    assert code == 0
    assert env["verdicts"][0]["pass"] is True


def test_compute_scaled():
    code, env, _ = call("compute", "--family", "laguerre", "--param", "alpha=1/3", "--n", "1,1", "--lambda", "5/2", "--check")
    assert code == 0
    assert env["value"]["re"] == "10/3"


def test_compute_generalized():
    code, env, _ = call("compute", "--family", "laguerre", "--param", "alpha=0", "--n", "1,1", "--x-power", "1", "--x-mode", "monomial")
    assert code == 0 and env["value"]["re"] == "3/1"


def test_compute_mixed():
    code, env, _ = call(
        "compute", "--family", "laguerre", "--param", "alpha=1/2", "--second-param", "alpha=1/2", "--n", "1", "--n2", "1"
    )
    assert code == 0 and env["value"]["re"] == "3/2"


def test_complex_values_serialize():
    code, env, _ = call("compute", "--family", "meixner-pollaczek", "--param", "delta=1/2", "--param", "eta=1", "--n", "1")
    assert code == 0
    assert env["value"] == {"re": "0/1", "im": "0/1"}
    code, env, _ = call("moments", "--family", "meixner-pollaczek", "--param", "delta=1/2", "--param", "eta=1", "--n", "1")
    assert env["value"]["moments"][1]["re"] == "1/2"


def test_enumerate_count():
    code, env, _ = call("enumerate", "--kind", "derangements", "--boxes", "2,2", "--count")
    assert code == 0 and env["value"] == 4


def test_enumerate_list_and_stats():
    code, env, _ = call("enumerate", "--kind", "matchings", "--boxes", "2,2")
    assert code == 0
    assert sorted(o["object"] for o in env["value"]) == ["13/24", "14/23"]
    code, env, _ = call("enumerate", "--kind", "matching", "--boxes", "2,2", "--stats", "cr")
    assert env["value"]["histogram"] == [{"stats": {"cr": 0}, "count": 1}, {"stats": {"cr": 1}, "count": 1}]


def test_moments_check():
    code, env, _ = call("moments", "--family", "charlier", "--param", "a=1", "--n", "4", "--check")
    assert code == 0
    assert [m["re"] for m in env["value"]["moments"]] == ["1/1", "1/1", "2/1", "5/1", "15/1"]
    assert all(v["pass"] for v in env["verdicts"])


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "--family", "jacobi", "--n", "1"),
        ("compute", "--family", "charlier", "--param", "a=0.5", "--n", "1"),
        ("compute", "--family", "charlier", "--param", "a=1/0", "--n", "1"),
        ("compute", "--family", "charlier", "--param", "b=1", "--n", "1"),
        ("compute", "--family", "hermite", "--n", "13,13"),
        ("enumerate", "--kind", "permutations", "--boxes", "6,6"),
        ("enumerate", "--kind", "trees", "--boxes", "2"),
        ("moments", "--family", "hermite", "--n", "2", "--check"),
        ("verify", "--suite", "nonsense"),
    ],
)
def test_usage_errors_exit_two(argv):
    code, env, err = call(*argv)
    assert code == 2
    assert env is None
    assert err


def test_failing_verification_exits_one():
    # the short birth-death boundary form fails away from lambda = 0
    code, env, _ = call("verify", "--suite", "boundary", "--quiet")
    assert code == 1 and env is None


def test_passing_suite_exits_zero():
    code, env, _ = call("verify", "--suite", "moments", "--max-total", "4")
    assert code == 0
    assert env["value"]["moments"]["pass"] is True


def test_deterministic_without_timing():
    argv = ("compute", "--family", "q-charlier", "--param", "a=1/2", "--param", "b=2", "--param", "c=1/3",
            "--param", "q=1/5", "--n", "2,2,1", "--check", "--no-timing")
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run(list(argv), out=buf, err=io.StringIO())
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["elapsed_ms"] == 0


@pytest.mark.skipif(shutil.which("olc") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(
        ["olc", "enumerate", "--kind", "partitions", "--boxes", "1,1,1", "--count"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == 1
