import json

import pytest

from qetude.cli import (cache_load, cache_roundtrip, cache_store, cached_det,
                        fetch_bfile, fixture_metadata, load_fixture, run)
from qetude.lehmer import det_recurrence
from qetude.qseries import substitute_x, theorem1_truncated
from qetude.reproduce import SEQUENCE_TERMS


def out_of(capsys):
    return capsys.readouterr().out


class TestVerbs:
    def test_det_text(self, capsys):
        assert run(["det", "--n", "4"]) == 0
        assert out_of(capsys).strip() == "1 - (1+q+q^2)*X + q^2*X^2"

    def test_det_oracle_agrees(self, capsys):
        run(["det", "--n", "6", "--method", "oracle"])
        oracle = out_of(capsys)
        run(["det", "--n", "6"])
        assert oracle == out_of(capsys)

    def test_det_json_parses(self, capsys):
        assert run(["det", "--n", "5", "--format", "json"]) == 0
        payload = json.loads(out_of(capsys))
        assert isinstance(payload, dict)

    def test_closed_form_matches_det(self, capsys):
        run(["closed-form", "--n", "9"])
        cf = out_of(capsys)
        run(["det", "--n", "9"])
        assert cf == out_of(capsys)

    def test_guess_text(self, capsys):
        assert run(["guess", "--mode", "andrews", "--amax", "2",
                    "--nmax", "12"]) == 0
        text = out_of(capsys)
        assert "GP(n-4, 2)" in text
        assert "holdout verified: True" in text

    def test_guess_json(self, capsys):
        assert run(["guess", "--mode", "ansatz", "--amax", "2",
                    "--nmax", "12", "--format", "json"]) == 0
        j = json.loads(out_of(capsys))
        assert j["mode"] == "ansatz" and len(j["terms"]) == 3

    def test_verify_default_passes(self, capsys):
        assert run(["verify", "--numeric", "10", "--coefficient", "3"]) == 0
        assert "FAIL" not in out_of(capsys)

    def test_verify_literal_certificate(self, capsys):
        assert run(["verify", "--certificate", "XN"]) == 0
        text = out_of(capsys)
        assert "either orientation" in text

    def test_verify_solve_certificate(self, capsys):
        assert run(["verify", "--solve-certificate", "4"]) == 0
        assert "PASS" in out_of(capsys)

    def test_series_symbolic(self, capsys):
        assert run(["series", "--truncate", "2"]) == 0
        assert out_of(capsys).splitlines()[0].startswith("q^0:")

    def test_series_specialized_and_inverted(self, capsys):
        assert run(["series", "--truncate", "6", "--x", "q", "--invert"]) == 0
        lines = out_of(capsys).splitlines()
        assert "reciprocal:" in lines

    def test_sequence_formats(self, capsys):
        assert run(["sequence", "--r", "-1", "--count", "5"]) == 0
        assert out_of(capsys).strip() == "1, 2, 4, 7, 13"
        assert run(["sequence", "--r", "-1", "--count", "3",
                    "--format", "bfile"]) == 0
        assert out_of(capsys) == "1 1\n2 2\n3 4\n"

    def test_rr_check(self, capsys):
        assert run(["rr-check", "--order", "10"]) == 0
        assert out_of(capsys).startswith("PASS")

    def test_reproduce_single_item(self, capsys):
        assert run(["reproduce", "--only", "xcoeffs"]) == 0
        assert out_of(capsys).strip() == "PASS  xcoeffs"


class TestExitCodes:
    def test_usage_error_is_2(self):
        with pytest.raises(SystemExit) as e:
            run(["det", "--n", "0"])
        assert e.value.code == 2

    def test_unknown_verb_is_2(self):
        with pytest.raises(SystemExit) as e:
            run(["frobnicate"])
        assert e.value.code == 2

    def test_domain_error_is_1(self, capsys):
        assert run(["guess", "--mode", "andrews", "--amax", "4",
                    "--nmax", "12"]) == 1
        assert "error:" in capsys.readouterr().err


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys):
        run(["guess", "--mode", "ansatz", "--amax", "3", "--nmax", "15",
             "--format", "json"])
        first = out_of(capsys)
        run(["guess", "--mode", "ansatz", "--amax", "3", "--nmax", "15",
             "--format", "json"])
        assert out_of(capsys) == first


class TestCache:
    def test_roundtrip(self, tmp_path, monkeypatch):
        monkeypatch.setenv("QETUDE_CACHE", str(tmp_path))
        assert cache_roundtrip(9)
        assert (tmp_path / "det_9.json").exists()
        assert cached_det(9) == det_recurrence(9)

    def test_disabled_without_env(self, monkeypatch):
        monkeypatch.delenv("QETUDE_CACHE", raising=False)
        assert cache_load(5) is None
        cache_store(5, det_recurrence(5))  # silently a no-op
        assert cached_det(5) == det_recurrence(5)

    def test_corrupt_file_warns_and_recomputes(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("QETUDE_CACHE", str(tmp_path))
        (tmp_path / "det_7.json").write_text("{not json")
        assert cached_det(7) == det_recurrence(7)
        assert "corrupt cache" in capsys.readouterr().err


class TestFixtures:
    def test_metadata_lists_both_sequences(self):
        meta = fixture_metadata()
        assert set(meta) == {"A003116", "A039924"}

    def test_a003116_matches_direct_count(self):
        pairs = load_fixture("A003116")
        assert [v for _, v in pairs] == SEQUENCE_TERMS
        assert pairs[0][0] == 1

    def test_a039924_consistent_with_limit_series(self):
        pairs = load_fixture("A039924")
        K = len(pairs) - 1
        series = substitute_x(theorem1_truncated(K), 1, 1).scalar_list()
        assert [v for _, v in pairs] == [int(c) for c in series]

    def test_fetch_offline_uses_fixture(self):
        assert fetch_bfile("A003116", online=False) == load_fixture("A003116")

    def test_unknown_sequence_rejected(self):
        with pytest.raises(KeyError):
            load_fixture("A000001")
