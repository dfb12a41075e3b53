"""Command-line interface: subcommands, golden outputs, determinism,
round-trips, and failure exit codes."""

import io
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from arrmono import laurent_ring, poly_ring
from arrmono.cli import main
from arrmono.serialize import extract_matrix
from conftest import (
    DELTA0,
    DELTA1,
    FIXTURES,
    MU0,
    MU1,
    OMEGA1,
    OMEGA2,
    OMEGABAR_NONRES,
    OMEGABAR_RES,
    PHI1,
    PHI2,
    PHIBAR_NONRES,
    PHIBAR_RES,
    mat,
)

GOLDEN = Path(__file__).resolve().parent / "golden"
L = laurent_ring(4, var="x")
R = poly_ring(4, var="y")

ARGS = {
    "-a": str(FIXTURES / "pencil4.arr"),
    "-p": str(FIXTURES / "pencil4.pres"),
    "-e": str(FIXTURES / "pencil4_twist12.endo"),
    "-c": str(FIXTURES / "pencil4_twist12.cert"),
    "xi1": str(FIXTURES / "pencil4_proj_nonres.txt"),
    "xi2": str(FIXTURES / "pencil4_proj_res.txt"),
}


def run_cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def structured(*argv) -> tuple[int, str]:
    return run_cli(*argv, "--format", "structured")


@pytest.mark.parametrize("name,argv", [
    ("info", ("info", "-a", ARGS["-a"])),
    ("fox", ("fox", "-p", ARGS["-p"])),
    ("aomoto", ("aomoto", "-a", ARGS["-a"])),
    ("connection", ("connection", "-a", ARGS["-a"], "-p", ARGS["-p"],
                    "-e", ARGS["-e"], "-c", ARGS["-c"])),
    ("induced", ("induced", "-a", ARGS["-a"], "-p", ARGS["-p"], "-e", ARGS["-e"],
                 "-c", ARGS["-c"], "--xi", ARGS["xi1"], "--xi", ARGS["xi2"])),
    ("verify", ("verify", "-a", ARGS["-a"], "-p", ARGS["-p"], "-e", ARGS["-e"],
                "-c", ARGS["-c"], "--xi", ARGS["xi1"], "--xi", ARGS["xi2"])),
])
def test_golden_outputs_byte_for_byte(name, argv):
    code, out = structured(*argv)
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_golden_matrices_carry_the_displayed_values():
    """The goldens are not self-fulfilling: parse them back and compare with
    matrices keyed in directly from the published displays."""
    fox = (GOLDEN / "fox.txt").read_text()
    assert extract_matrix(fox, "Delta0") == mat(L, DELTA0)
    assert extract_matrix(fox, "Delta1") == mat(L, DELTA1)
    aomoto = (GOLDEN / "aomoto.txt").read_text()
    assert extract_matrix(aomoto, "mu0") == mat(R, MU0)
    assert extract_matrix(aomoto, "mu1") == mat(R, MU1)
    conn = (GOLDEN / "connection.txt").read_text()
    assert extract_matrix(conn, "Phi1") == mat(L, PHI1)
    assert extract_matrix(conn, "Phi2") == mat(L, PHI2)
    assert extract_matrix(conn, "Omega1") == mat(R, OMEGA1)
    assert extract_matrix(conn, "Omega2") == mat(R, OMEGA2)
    induced = (GOLDEN / "induced.txt").read_text()
    assert extract_matrix(induced, "PhiBar0") == mat(L, PHIBAR_NONRES)
    assert extract_matrix(induced, "OmegaBar0") == mat(R, OMEGABAR_NONRES)
    assert extract_matrix(induced, "PhiBar1") == mat(L, PHIBAR_RES)
    assert extract_matrix(induced, "OmegaBar1") == mat(R, OMEGABAR_RES)


def test_every_emitted_matrix_reparses_to_equal_lines():
    """Round-trip: each matrix block in each golden report parses back and
    re-serializes to the identical bytes."""
    from arrmono.serialize import matrix_lines, parse_matrix_block
    for path in sorted(GOLDEN.glob("*.txt")):
        lines = path.read_text().splitlines()
        i = 0
        blocks = 0
        while i < len(lines):
            if lines[i].startswith("matrix "):
                j = lines.index("endmatrix", i)
                name, m = parse_matrix_block(lines[i:j + 1])
                assert matrix_lines(name, m) == lines[i:j + 1]
                blocks += 1
                i = j + 1
            else:
                i += 1
        if path.name in ("fox.txt", "aomoto.txt", "connection.txt", "induced.txt"):
            assert blocks > 0


def test_projection_upsilon_defaults_to_linear_part(tmp_path):
    from arrmono import parse_projection
    text = (FIXTURES / "pencil4_proj_nonres.txt").read_text()
    head, _, _ = text.partition("\nupsilon\n")
    derived = parse_projection(head)
    explicit = parse_projection(text)
    assert derived.upsilon == explicit.upsilon


def test_structured_output_is_deterministic():
    argv = ("connection", "-p", ARGS["-p"], "-e", ARGS["-e"], "-c", ARGS["-c"])
    assert structured(*argv) == structured(*argv)


def test_specialize_trivial_point():
    code, out = run_cli("specialize", "-p", ARGS["-p"], "--ring", "x", "--at", "1,1,1,1")
    assert code == 0
    assert "betti: 1,4,5" in out and "verdict: trivial" in out


def test_specialize_nonresonant_point():
    code, out = run_cli("specialize", "-p", ARGS["-p"], "--ring", "x", "--at", "2,2,2,2")
    assert code == 0
    assert "betti: 0,0,2" in out and "verdict: non-resonant" in out
    assert "top_matches_euler: True" in out


def test_specialize_resonant_point():
    code, out = run_cli("specialize", "-p", ARGS["-p"], "--ring", "x", "--at", "2,3,1/6,1")
    assert code == 0
    assert "betti: 0,1,3" in out and "verdict: resonant" in out


def test_specialize_aomoto_side():
    code, out = run_cli("specialize", "-a", ARGS["-a"], "--ring", "y", "--at", "0,0,0,0")
    assert code == 0
    assert "betti: 1,4,5" in out


def test_verify_exit_zero_and_all_pass():
    code, out = run_cli("verify", "-a", ARGS["-a"], "-p", ARGS["-p"],
                        "-e", ARGS["-e"], "-c", ARGS["-c"],
                        "--xi", ARGS["xi1"], "--xi", ARGS["xi2"])
    assert code == 0
    assert "FAIL" not in out
    assert out.count("[pass]") >= 15


def test_verify_fails_on_corrupted_certificate(tmp_path):
    bad = tmp_path / "bad.cert"
    text = (FIXTURES / "pencil4_twist12.cert").read_text()
    bad.write_text(text.replace("( 1 , 2 , -1 )", "( 1 , 2 , +1 )"))
    code, out = run_cli("verify", "-a", ARGS["-a"], "-p", ARGS["-p"],
                        "-e", ARGS["-e"], "-c", str(bad))
    assert code == 1


def test_missing_required_inputs():
    code, _ = run_cli("fox")
    assert code == 2


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.arr"
    bad.write_text("dim q\n")
    code, _ = run_cli("info", "-a", str(bad))
    assert code == 2


def test_monodromy_without_certificate():
    code, out = run_cli("monodromy", "-p", ARGS["-p"], "-e", ARGS["-e"])
    assert code == 0 and "Phi1" in out and "Phi2" not in out


def test_monodromy_fallback_is_flagged():
    code, out = run_cli("monodromy", "-p", ARGS["-p"], "-e", ARGS["-e"],
                        "--fallback-solve")
    assert code == 0 and "NON-CANONICAL" in out
    assert "phi2_kernel_dimension: 2" in out
