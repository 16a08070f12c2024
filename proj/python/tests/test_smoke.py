from pathlib import Path

import pytest

import jrobust

CORPUS = Path(__file__).resolve().parents[2] / "tests" / "fixtures" / "corpus"

LOOP = """class A {
    int sum(int[] xs) {
        int s = 0;
        for (int i = 0; i < xs.length; i++) {
            s += xs[i];
        }
        return s;
    }
}
"""


def test_kinds():
    assert jrobust.kinds()[0] == "LocalVarRename"
    assert len(jrobust.kinds()) == 8


def test_loop_exchange():
    sites = jrobust.sites(LOOP, "LoopExchange")
    assert len(sites) == 1
    out = jrobust.transform(LOOP, "LoopExchange", sites[0]["site_id"])
    assert "while (i < xs.length)" in out
    assert "for (" not in out


def test_rename_needs_a_name():
    site = jrobust.sites(LOOP, "LocalVarRename")[0]
    with pytest.raises(ValueError):
        jrobust.transform(LOOP, "LocalVarRename", site["site_id"])
    out = jrobust.transform(LOOP, "LocalVarRename", site["site_id"], new_name="total")
    assert "int total = 0;" in out


def test_unknown_kind_and_bad_source():
    with pytest.raises(jrobust.InputError):
        jrobust.sites(LOOP, "Shuffle")
    with pytest.raises(jrobust.InputError):
        jrobust.sites("class {", "InsertLog")


def test_metrics():
    assert jrobust.pass_at_k_unbiased(4, 2, 2) == pytest.approx(5 / 6)
    assert jrobust.relative_change(14.53, 6.54) == (54.99, "down", "54.99↓")
    assert jrobust.codebleu(LOOP, LOOP)["total"] == 1.0


def test_build_benchmark(tmp_path):
    result = jrobust.build_benchmark(
        CORPUS / "corpus.jsonl", kinds=["LoopExchange"], out=tmp_path / "out"
    )
    assert result["loaded"] == 25
    assert result["total"] == result["counts"]["LoopExchange"] > 0
    assert (tmp_path / "out" / "manifest.json").exists()
