import io
import json

import pytest

from modbraid.controllers.cli_controller import EXIT_FAILED, EXIT_OK, EXIT_USAGE, CliController


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = CliController(out, err).run(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_compute_phi_prints_json():
    code, out, _ = run("compute", "phi", "--cell", "e:1,2,3", "--n", "3")
    assert code == EXIT_OK
    assert out == "{\"1,3\": 1, \"2,3\": -1}\n"


def test_compute_json_keeps_the_cell(tmp_path):
    path = tmp_path / "phi.json"
    code, out, _ = run("compute", "phi", "--cell", "e:1,2,3", "--n", "4", "--json", str(path))
    assert code == EXIT_OK
    assert json.loads(out) == {"1,3": 1, "2,3": -1}
    saved = json.loads(path.read_text())
    assert (saved["cell"], saved["n"], saved["schema"]) == ("e:1,2,3", 4, 1)
    assert saved["value"] == {"1,3": 1, "2,3": -1}


def test_compute_cocycle_and_element():
    code, out, _ = run("compute", "cocycle", "--p", "s(2,4)", "--q", "s(1,3)", "--n", "4")
    assert code == EXIT_OK
    assert json.loads(out) == {"1,2": -1, "1,4": 1, "2,3": 1, "3,4": -1}

    code, out, _ = run("compute", "element", "--word", "b1 b1 b1 b1", "--n", "2", "--ring", "z2")
    assert code == EXIT_OK
    assert json.loads(out)["vec"] == {}


def test_compute_burau():
    code, out, _ = run("compute", "burau", "--word", "b1^-1", "--n", "2", "--mod", "0")
    assert code == EXIT_OK
    assert json.loads(out)["rows"] == [[0, 1], [-1, 2]]


def test_enumerate_and_bound():
    assert run("enumerate", "zn", "--n", "3")[:2] == (EXIT_OK, "48\n")
    assert run("bound", "schreier", "--n", "4")[:2] == (EXIT_OK, "3073\n")


def test_verify_exit_codes():
    code, out, _ = run("verify", "nonsplit", "--n", "2")
    assert code == EXIT_OK
    assert "1/1 cases passed" in out
    assert run("verify", "closed-forms", "--n", "3")[0] == EXIT_OK


def test_coset_enum_builtin_and_abort():
    code, out, _ = run("coset-enum", "--builtin", "pres11", "--n", "2")
    assert (code, out) == (EXIT_OK, "order: 4\n")
    code, out, _ = run("coset-enum", "--builtin", "pres11", "--n", "3", "--limit", "5")
    assert code == EXIT_FAILED
    assert out.startswith("aborted")


def test_coset_enum_presentation_with_free_generator(tmp_path):
    path = tmp_path / "free.pres"
    path.write_text("gens: a, b;\nrels: a^2;\n")
    code, out, _ = run("coset-enum", "--pres", str(path), "--limit", "100")
    assert code == EXIT_FAILED
    assert out.startswith("aborted")


@pytest.mark.parametrize("argv", [
    ["verify", "tables", "--n", "0"],
    ["verify", "split", "--n", "3", "--t", "3"],
    ["verify", "presentations", "--n", "5"],
    ["verify", "nosuch", "--n", "3"],
    ["compute", "phi", "--n", "3"],
    ["compute", "phi", "--cell", "e:1,2,4", "--n", "3"],
    ["compute", "cocycle", "--p", "[1,1,2]", "--q", "s(1,2)", "--n", "3"],
    ["compute", "burau", "--word", "b5", "--n", "3"],
    ["coset-enum", "--builtin", "nope"],
    ["coset-enum", "--pres", "missing.pres", "--builtin", "sn3"],
    ["enumerate", "zn", "--n", "6"],
    [],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_usage_error_message_on_stderr():
    _, out, err = run("compute", "phi", "--n", "3")
    assert out == ""
    assert err.strip() == "error: --cell is required"


def test_json_export(tmp_path):
    path = tmp_path / "nonsplit.json"
    code, _, err = run("verify", "nonsplit", "--n", "3", "--json", str(path))
    assert code == EXIT_OK
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["suite"] == "nonsplit" and data["summary"]["failed"] == 0
    assert str(path) in err


def test_pdf_only_for_reports(tmp_path):
    code, _, err = run("bound", "schreier", "--n", "3", "--pdf", str(tmp_path / "x.pdf"))
    assert code == EXIT_USAGE
    assert "--pdf" in err


def test_version(capsys):
    assert run("--version")[0] == EXIT_OK


def test_flags_override_settings():
    controller = CliController(io.StringIO(), io.StringIO())
    assert controller.run(["bound", "schreier", "--n", "3", "--limit", "50", "--verbose"]) == EXIT_OK
    assert controller.settings.coset_limit == 50
    assert controller.settings.log_level == "DEBUG"


def test_language_flag():
    code, out, _ = run("bound", "schreier", "--n", "2", "--language", "en")
    assert (code, out) == (EXIT_OK, "1\n")
    assert run("bound", "schreier", "--n", "2", "--language", "xx")[0] == EXIT_USAGE
