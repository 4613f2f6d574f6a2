import pytest

from directed_quantum_walk.cli.Run_Options import Run_Options
from directed_quantum_walk.cli.command_line import THREADS_ENVIRONMENT_VARIABLE, main, parse_int_list, parse_modes, thread_cap
from directed_quantum_walk.cli.csv_output import SWEEP_HEADER, format_float
from directed_quantum_walk.walk_analysis.Sweep_Record import Walk_Mode
from directed_quantum_walk.walk_engine.Edge_Pairing import Pairing_Mode
from directed_quantum_walk.walk_exceptions.cli_exceptions import Usage_Exception
from directed_quantum_walk.walk_warnings.walk_warnings import Unbalanced_Vertex_Warning


@pytest.fixture(autouse=True)
def _single_thread(monkeypatch):
    monkeypatch.setenv(THREADS_ENVIRONMENT_VARIABLE, "2")


def test_format_float():
    assert format_float(1.0) == "1"
    assert format_float(0.25) == "0.25"
    assert format_float(0.1 + 0.2) == "0.30000000000000004"
    assert format_float(None) == ""


def test_parse_lists():
    assert parse_int_list("2, 4,8", "--n") == [2, 4, 8]
    assert parse_modes("quantum,Reduced") == [Walk_Mode.Quantum, Walk_Mode.Reduced]
    with pytest.raises(Usage_Exception):
        parse_int_list("2,,4", "--n")
    with pytest.raises(Usage_Exception):
        parse_int_list("two", "--n")
    with pytest.raises(Usage_Exception):
        parse_modes("quantum,fast")


def test_thread_cap(monkeypatch):
    monkeypatch.setenv(THREADS_ENVIRONMENT_VARIABLE, "3")
    assert thread_cap() == 3
    monkeypatch.delenv(THREADS_ENVIRONMENT_VARIABLE)
    assert 1 <= thread_cap() <= 8
    monkeypatch.setenv(THREADS_ENVIRONMENT_VARIABLE, "0")
    with pytest.raises(Usage_Exception):
        thread_cap()


def test_run_options_file_stem(tmp_path):
    options = Run_Options(Walk_Mode.Quantum, 8, 100, Pairing_Mode.Random, 7, out_dir=tmp_path)
    assert options.file_stem == "distribution_quantum_n8_t100_random_s7"
    assert options.output_path == tmp_path / "distribution_quantum_n8_t100_random_s7.csv"
    assert Run_Options(Walk_Mode.Classical, 4, 10).file_stem == "distribution_classical_n4_t10"
    assert Run_Options(loop_length=3).file_stem == "distribution_quantum_n4_t100_L3"


@pytest.mark.parametrize("options", [Run_Options(n=0), Run_Options(t=-1), Run_Options(pairing=Pairing_Mode.Random),
                                     Run_Options(mode=Walk_Mode.Classical, pairing=Pairing_Mode.Random, seed=1),
                                     Run_Options(mode=Walk_Mode.Reduced, loop_length=2), Run_Options(rerandomize_pairing=True)])
def test_inconsistent_run_options_rejected(options):
    with pytest.raises(Usage_Exception):
        options.validate()


def test_run_zero_steps(tmp_path, capsys):
    assert main(["run", "--n", "4", "--t", "0", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "distribution_quantum_n4_t0.csv").read_bytes() == b"position,probability\n0,1\n"
    assert "mean=0 variance=0" in capsys.readouterr().out


def test_run_classical_walk(tmp_path, capsys):
    assert main(["run", "--mode", "classical", "--n", "4", "--t", "1", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "distribution_classical_n4_t1.csv").read_text() == "position,probability\n0,0.75\n1,0.25\n"
    assert "interval_lo" not in capsys.readouterr().out


def test_run_quantum_walk_prints_interval(tmp_path, capsys):
    assert main(["run", "--n", "4", "--t", "100", "--out", str(tmp_path)]) == 0
    assert "interval_lo=25 interval_hi=75 tail_mass=" in capsys.readouterr().out
    lines = (tmp_path / "distribution_quantum_n4_t100.csv").read_text().splitlines()
    assert len(lines) == 102
    assert sum(float(line.split(",")[1]) for line in lines[1:]) == pytest.approx(1.0, abs=1e-10)


def test_random_run_is_byte_identical_across_reruns(tmp_path):
    arguments = ["run", "--mode", "quantum", "--n", "8", "--t", "100", "--pairing", "random", "--seed", "7"]
    assert main(arguments + ["--out", str(tmp_path / "first")]) == 0
    assert main(arguments + ["--out", str(tmp_path / "second")]) == 0
    name = "distribution_quantum_n8_t100_random_s7.csv"
    first = (tmp_path / "first" / name).read_bytes()
    assert first == (tmp_path / "second" / name).read_bytes()
    assert b"\r" not in first


def test_rerandomized_run_writes_its_own_file(tmp_path):
    arguments = ["run", "--n", "3", "--t", "20", "--pairing", "random", "--seed", "1", "--rerandomize", "--out", str(tmp_path)]
    assert main(arguments) == 0
    assert (tmp_path / "distribution_quantum_n3_t20_random_s1_per_step.csv").exists()


@pytest.mark.parametrize("arguments", [
    ["run", "--pairing", "random"],
    ["run", "--n", "x"],
    ["run", "--mode", "fast"],
    ["sweep", "--n", ""],
    ["sweep", "--modes", "classical,fast"],
    ["sweep", "--pairing", "random"],
    ["realizable", "--graph", "edges.txt", "--interior"],
    [],
])
def test_usage_errors_exit_with_two(arguments, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(arguments) == 2


def test_invalid_thread_count_is_a_usage_error(tmp_path, monkeypatch):
    monkeypatch.setenv(THREADS_ENVIRONMENT_VARIABLE, "many")
    assert main(["sweep", "--n", "2", "--t", "5", "--out", str(tmp_path)]) == 2


def test_version_exits_cleanly(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.startswith("dqwalk ")


def test_sweep_writes_records(tmp_path):
    assert main(["sweep", "--n", "2,4", "--t", "20", "--modes", "classical,quantum", "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "sweep.csv").read_text().splitlines()
    assert lines[0] == ",".join(SWEEP_HEADER)
    assert len(lines) == 5
    classical = lines[1].split(",")
    assert classical[:5] == ["2", "20", "classical", "", ""]
    assert classical[7:] == ["", "", ""]
    quantum = lines[2].split(",")
    assert quantum[:5] == ["2", "20", "quantum", "natural", ""]
    assert all(field != "" for field in quantum[5:])


def test_sweep_writes_distributions_on_request(tmp_path):
    arguments = ["sweep", "--n", "4", "--t", "10", "--modes", "quantum", "--pairing", "random", "--seeds", "1,2",
                 "--distributions", "--out", str(tmp_path)]
    assert main(arguments) == 0
    assert (tmp_path / "distribution_quantum_n4_t10_random_s1.csv").exists()
    assert (tmp_path / "distribution_quantum_n4_t10_random_s2.csv").exists()


def test_sweep_quantum_and_reduced_files_agree(tmp_path):
    arguments = ["sweep", "--n", "4", "--t", "100", "--modes", "quantum,reduced", "--distributions", "--out", str(tmp_path)]
    assert main(arguments) == 0
    quantum = (tmp_path / "distribution_quantum_n4_t100.csv").read_text().splitlines()[1:]
    reduced = (tmp_path / "distribution_reduced_n4_t100.csv").read_text().splitlines()[1:]
    assert len(quantum) == len(reduced) == 101
    for quantum_line, reduced_line in zip(quantum, reduced):
        assert float(quantum_line.split(",")[1]) == pytest.approx(float(reduced_line.split(",")[1]), abs=1e-9)


def test_reproduce_writes_grids(tmp_path):
    assert main(["reproduce", "--n", "2,4", "--t", "10", "--out", str(tmp_path)]) == 0
    for mode in ("classical", "quantum"):
        lines = (tmp_path / f"grid_{mode}.csv").read_text().splitlines()
        assert lines[0] == "position,2,4"
        assert len(lines) == 12
    assert len((tmp_path / "sweep.csv").read_text().splitlines()) == 5


def test_verify_quick_passes(capsys):
    assert main(["verify", "--depth", "quick"]) == 0
    assert "checks passed (quick)" in capsys.readouterr().out


def test_realizable_generated_interior(capsys):
    assert main(["realizable", "--n", "4", "--x-max", "6", "--loop-length", "2", "--interior"]) == 0
    assert main(["realizable", "--n", "4", "--x-max", "6"]) == 1
    assert "vertex 0" in capsys.readouterr().out


def test_realizable_edge_list_file(tmp_path):
    balanced, unbalanced = tmp_path / "balanced.txt", tmp_path / "unbalanced.txt"
    balanced.write_text("0 1\n1 0\n0 0\n")
    unbalanced.write_text("0 1\n")
    assert main(["realizable", "--graph", str(balanced)]) == 0
    with pytest.warns(Unbalanced_Vertex_Warning):
        assert main(["realizable", "--graph", str(unbalanced), "--warn"]) == 1


def test_malformed_edge_list_is_a_runtime_failure(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\nzero one\n")
    assert main(["realizable", "--graph", str(path)]) == 1
    assert "Quantum Walk Exception" in capsys.readouterr().err


def test_graph_to_stdout(capsys):
    assert main(["graph", "--n", "2", "--x-max", "1"]) == 0
    assert capsys.readouterr().out == "0 1\n0 0\n1 1\n"


def test_missing_edge_list_file_is_a_runtime_failure(tmp_path, capsys):
    assert main(["realizable", "--graph", str(tmp_path / "missing.txt")]) == 1
    assert "realizable:" in capsys.readouterr().err


def test_non_ascii_edge_list_is_a_runtime_failure(tmp_path):
    path = tmp_path / "edges.txt"
    path.write_bytes("0 1\n1 é\n".encode("utf-8"))
    assert main(["realizable", "--graph", str(path)]) == 1


def test_output_directory_that_is_a_file_is_a_runtime_failure(tmp_path, capsys):
    occupied = tmp_path / "occupied"
    occupied.write_text("")
    assert main(["run", "--n", "2", "--t", "3", "--out", str(occupied)]) == 1
    assert "run:" in capsys.readouterr().err
    assert main(["graph", "--out", str(tmp_path / "no_such_dir" / "line.txt")]) == 1


def test_graph_to_file(tmp_path):
    path = tmp_path / "line.txt"
    assert main(["graph", "--n", "3", "--x-max", "2", "--out", str(path)]) == 0
    assert main(["realizable", "--graph", str(path)]) == 1
