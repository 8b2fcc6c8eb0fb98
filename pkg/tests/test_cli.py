"""Command-line tests.

This module tests:
- Every subcommand's stdout payload and exit code
- Exit code mapping (0 success, 1 false/none, 2 usage, 3 internal error)
- JSON output
- construct -> verify round trip
"""

import json

import pytest

from nutforge.__main__ import main
from nutforge.cli import cmd_construct, cmd_verify
from nutforge.dtos.dto import FailureKind, NutCertificate, NutFailure
from nutforge.services import construction_service, nutcheck_service


@pytest.fixture(autouse=True)
def no_dotenv(mocker):
    """Keep a developer's .env out of CLI runs."""
    mocker.patch("nutforge.__main__.bootstrap", return_value=None)


def run(capsys, *argv):
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    out, err = capsys.readouterr()
    return excinfo.value.code, out.strip(), err.strip()


@pytest.mark.unit
class TestConstruct:
    def test_sdprime_example(self, capsys):
        code, out, _ = run(capsys, "construct", "28", "16")
        assert code == 0
        assert out == "1,2,3,6,10,11,12,13 [THM-S″-n≡8 4]"

    def test_none(self, capsys):
        assert run(capsys, "construct", "16", "8")[:2] == (1, "NONE")

    def test_verified(self, capsys):
        code, out, _ = run(capsys, "construct", "8", "4", "--verify")
        assert code == 0
        assert out == "2,3 [THM2-odd-t-4|n] verified=both"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "construct", "14", "8", "--json")
        assert code == 0
        assert json.loads(out) == {"n": 14, "gens": [1, 4, 5, 6], "case": "THM3-n≡4 2"}

    def test_json_none(self, capsys):
        code, out, _ = run(capsys, "construct", "16", "8", "--json")
        assert (code, json.loads(out)) == (1, None)

    def test_prefer_interval(self, capsys):
        code, out, _ = run(capsys, "construct", "16", "12", "--prefer-interval")
        assert code == 0
        assert out == "1,2,4,5,6,7 [THM1-odd-t-interval]"

    def test_exhausted_dispatcher_is_internal_error(self, capsys, mocker):
        """A member pair with no construction must not read as NONE."""
        mocker.patch.object(construction_service, "search_first_nut", return_value=None)
        code, out, err = run(capsys, "construct", "20", "8")
        assert (code, out) == (3, "")
        assert "nutforge: internal error:" in err
        assert "n=20, d=8" in err

    def test_non_nut_construction_is_internal_error(self, capsys, mocker):
        bogus = NutCertificate(
            verdict=False,
            method="both",
            n=8,
            gens=(2, 3),
            failure=NutFailure(FailureKind.NULLITY, 2),
        )
        mocker.patch.object(construction_service, "cross_check", return_value=bogus)
        code, out, err = run(capsys, "construct", "8", "4", "--verify")
        assert (code, out) == (3, "")
        assert "nullity(2)" in err


@pytest.mark.unit
class TestVerify:
    @pytest.mark.parametrize(
        "argv, code, out",
        [
            (("8", "2,3"), 0, "nut=true method=both"),
            (("4", "1"), 1, "nut=false method=both failure=unbalanced-generators"),
            (("6", "1,2"), 1, "nut=false method=both failure=vanishing-at(6)"),
            (("8", "2,3", "--method", "kernel"), 0, "nut=true method=kernel"),
            (("8", "3,4"), 1, "nut=false method=kernel failure=nullity(0)"),
        ],
    )
    def test_verdicts(self, capsys, argv, code, out):
        assert run(capsys, "verify", *argv)[:2] == (code, out)

    @pytest.mark.parametrize(
        "argv",
        [("8", "9"), ("8", "1,,2"), ("8", "2,2"), ("8", "3,4", "--method", "spectral")],
    )
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, "verify", *argv)
        assert code == 2
        assert out == ""
        assert err.startswith("nutforge: ")

    def test_unknown_method_is_rejected_by_argparse(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "8", "2,3", "--method", "eigen"])
        assert excinfo.value.code == 2

    def test_disagreement_exit_code(self, capsys, mocker):
        bogus = NutCertificate(
            verdict=False,
            method="kernel",
            n=8,
            gens=(2, 3),
            failure=NutFailure(FailureKind.NULLITY, 2),
        )
        mocker.patch.object(nutcheck_service, "kernel_nut_test", return_value=bogus)
        code, _, err = run(capsys, "verify", "8", "2,3")
        assert code == 3
        assert "disagreement" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "8", "2,3", "--json")
        assert code == 0
        assert json.loads(out) == {"verdict": True, "method": "both", "n": 8, "gens": [2, 3]}


@pytest.mark.unit
class TestOtherCommands:
    def test_membership(self, capsys):
        assert run(capsys, "membership", "14", "8")[:2] == (0, "true")
        assert run(capsys, "membership", "16", "8")[:2] == (1, "false")

    def test_enumerate_count(self, capsys):
        assert run(capsys, "enumerate", "16", "8", "--count")[:2] == (1, "0")
        code, out, _ = run(capsys, "enumerate", "14", "8", "--count")
        assert code == 0
        assert int(out) >= 1

    def test_enumerate_first(self, capsys):
        code, out, _ = run(capsys, "enumerate", "8", "4", "--first")
        assert (code, out) == (0, "1,2")

    def test_enumerate_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("NUTFORGE_ENUM_CAP", "10")
        code, _, err = run(capsys, "enumerate", "16", "8")
        assert code == 2
        assert "--force" in err
        assert run(capsys, "enumerate", "16", "8", "--force")[0] == 1

    def test_first_and_count_are_exclusive(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["enumerate", "16", "8", "--first", "--count"])
        assert excinfo.value.code == 2

    def test_table_grid(self, capsys):
        code, out, _ = run(capsys, "table", "16", "8")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "n,4,8"
        assert lines[1:] == [
            "2,false,false",
            "4,false,false",
            "6,false,false",
            "8,true,false",
            "10,true,false",
            "12,true,false",
            "14,true,true",
            "16,true,false",
        ]

    def test_table_constructive(self, capsys):
        code, out, _ = run(capsys, "table", "14", "8", "--constructive")
        assert code == 0
        assert out.splitlines()[0] == "n,d,member,case,generators"
        assert '14,8,true,THM3-n≡4 2,"1,4,5,6"' in out

    def test_appendix_z(self, capsys):
        code, out, _ = run(capsys, "appendix", "z")
        assert code == 0
        assert out.startswith("PASS z: 9 polynomials clean, 94 stored remainders checked")

    def test_appendix_identities_json(self, capsys):
        code, out, _ = run(capsys, "appendix", "identities", "--tmax", "12", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["passed"] is True
        assert data["t_max"] == 12

    def test_appendix_bad_tmax(self, capsys):
        assert run(capsys, "appendix", "identities", "--tmax", "2")[0] == 2


@pytest.mark.integration
def test_construct_then_verify_round_trip():
    """Every construct output for n <= 64, d <= 24 verifies as a nut graph."""
    for n in range(2, 65, 2):
        for d in range(4, 25, 4):
            built = cmd_construct(n, d)
            if built.exit_code != 0:
                continue
            gens = built.payload.split(" ")[0]
            checked = cmd_verify(n, gens)
            assert checked.exit_code == 0, (n, d, gens)
            assert checked.payload == "nut=true method=both"

