import json

import pytest

from carpet_ext.anchors import ANCHORS
from carpet_ext.cli import main, parse_twist
from carpet_ext.divisors import DivisorClass, HirzebruchSurface


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coh_line_bundle(capsys):
    code, out, _ = run(capsys, "coh", "--e", "0", "--a", "2", "--b", "2")
    assert code == 0 and out.startswith("h = (9, 0, 0)")
    code, out, _ = run(capsys, "coh", "--e", "0", "--a", "0", "--b", "0")
    assert out.startswith("h = (1, 0, 0)")


def test_coh_tangent(capsys):
    code, out, _ = run(capsys, "coh", "--e", "0", "--tangent", "-H", "--a", "3", "--b", "5")
    assert code == 0 and out.startswith("h = (0, 0, 4) exact")


def test_coh_exact_demand_on_interval(capsys):
    # T_Y on F_2: H^0(2f) can map onto H^1(2C0+2f)
    code, out, _ = run(capsys, "coh", "--e", "2", "--tangent", "0,0", "--a", "1", "--b", "3", "--exact")
    assert "interval" in out and code == 3


def test_coh_json(capsys):
    code, out, _ = run(capsys, "coh", "--e", "1", "--a", "1", "--b", "2", "--format", "json")
    doc = json.loads(out)
    assert doc == {"surface": {"e": 1}, "divisor": {"a": 1, "b": 2}, "h": [5, 0, 0],
                   "exact": True, "anchors": ["leray", "relative-duality"]}


def test_alpha(capsys):
    code, out, _ = run(capsys, "alpha", "--e", "0", "--a", "2", "--b", "6")
    assert code == 0 and out.startswith("α ≤ 0; (r,g)=(2,7); NOT extendable")


def test_alpha_indeterminate(capsys):
    assert run(capsys, "alpha", "--e", "0", "--a", "1", "--b", "3")[0] == 3
    assert run(capsys, "alpha", "--e", "1", "--a", "2", "--b", "3")[0] == 3


def test_bad_input(capsys):
    assert run(capsys, "alpha", "--e", "1", "--a", "2", "--b", "2")[0] == 2
    assert run(capsys, "classify", "fano", "--r", "1", "--g", "4")[0] == 2
    assert run(capsys, "classify", "mukai", "--r", "2", "--g", "5")[0] == 2
    assert run(capsys, "coh", "--e", "0", "--a", "1", "--b", "1", "--tangent", "xyz")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["coh", "--e", "0", "--a", "x", "--b", "1"])
    assert exc.value.code == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "fano", "--r", "3", "--g", "3")
    assert code == 0 and out.startswith("EMPTY (degree 4/3 non-integral)")
    code, out, _ = run(capsys, "classify", "mukai", "--n", "5", "--r", "2", "--g", "5")
    assert code == 0 and out.startswith("nonempty irreducible; dim T at triple cone = 405")


def test_beta_gamma_normal(capsys):
    code, out, _ = run(capsys, "beta", "--e", "0", "--a", "3", "--b", "5")
    assert code == 0 and out.startswith("β = 0")
    code, out, _ = run(capsys, "gamma", "--e", "0", "--b", "2", "-v")
    assert "γ = 10" in out and "correction +1" in out
    code, out, _ = run(capsys, "normal-bound", "--e", "0", "--a", "2", "--b", "2", "--k", "2")
    assert out.startswith("h0(N(-2H)) ≤ 1")


@pytest.mark.parametrize("argv", [
    ("coh", "--e", "0", "--a", "2", "--b", "2"),
    ("coh", "--e", "0", "--tangent", "-H+K", "--a", "2", "--b", "5"),
    ("alpha", "--e", "1", "--a", "3", "--b", "6"),
    ("beta", "--e", "0", "--a", "4", "--b", "4"),
    ("gamma", "--e", "1", "--b", "4"),
    ("normal-bound", "--e", "0", "--a", "3", "--b", "3"),
    ("classify", "fano", "--r", "2", "--g", "3"),
    ("classify", "fano", "--r", "6", "--g", "9"),
    ("classify", "mukai", "--n", "4", "--r", "2", "--g", "4"),
])
def test_every_verdict_line_is_anchored(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    head = out.splitlines()[0]
    inside = head[head.rindex("[") + 1: head.rindex("]")]
    assert any(a.strip() in ANCHORS for a in inside.split(","))


def test_parse_twist():
    s = HirzebruchSurface(1)
    h = DivisorClass(2, 3)
    assert parse_twist("-H", h, s) == DivisorClass(-2, -3)
    assert parse_twist("-H+K", h, s) == DivisorClass(-4, -6)
    assert parse_twist("-2H", h, s) == DivisorClass(-4, -6)
    assert parse_twist("1,-2", h, s) == DivisorClass(1, -2)


def test_verify_paper_exit_code(capsys):
    code, out, _ = run(capsys, "verify-paper")
    summary = out.strip().splitlines()[-1]
    assert summary.startswith("summary:")
    assert (code == 0) == (" 0 failed" in summary)
