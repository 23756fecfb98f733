"""Command-line interface: output contracts, exit codes, error paths."""

import json

import pytest

from gig.cli import main, parse_duration

OK, USAGE, INCONCLUSIVE = 0, 1, 2


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


# ---------------------------------------------------------------------------
# classify

def test_classify_k33_odd_text(capsys):
    rc, out, err = run(capsys, "classify", "k(3,3)", "--colour", "odd",
                       "--oracle")
    assert rc == OK and not err
    assert "classically solvable: no" in out
    assert "J trivial: no" in out
    assert "finite: yes" in out
    assert "abelian: no" in out
    assert "perfect classical strategy: no" in out
    assert "perfect quantum strategy: yes" in out
    assert "quantum advantage: yes" in out
    assert "order: 32" in out


def test_classify_w5_odd(capsys):
    rc, out, _ = run(capsys, "classify", "wheel(5)", "--colour", "odd")
    assert rc == OK
    assert "J trivial: yes" in out
    assert "abelian: yes" in out
    assert "perfect quantum strategy: no" in out


def test_classify_json_deterministic(capsys):
    rc1, out1, _ = run(capsys, "classify", "k(3,3)", "--colour", "odd",
                       "--json")
    rc2, out2, _ = run(capsys, "classify", "k(3,3)", "--colour", "odd",
                       "--json")
    assert rc1 == rc2 == OK
    assert out1 == out2
    assert out1.count("\n") == 1
    obj = json.loads(out1)
    for key in ("graph", "trivial", "j_trivial", "classically_solvable",
                "finite", "abelian", "game"):
        assert key in obj
    assert obj["game"] == {"classical": False, "quantum": True,
                           "advantage": True}
    assert obj["j_trivial"]["verdict"] == "no"


def test_classify_c2c2_infinite(capsys):
    rc, out, _ = run(capsys, "classify", "c2c2", "--json")
    assert rc == OK
    obj = json.loads(out)
    assert obj["finite"]["verdict"] == "no"
    assert obj["finite"]["witness"]["pattern"] == "c2c2"


def test_classify_strict_flags_inconclusive(capsys, tmp_path):
    # disconnected coloured graph: the abelian verdict stays inconclusive
    f = tmp_path / "two.txt"
    f.write_text("vertex a 0\nvertex b 0\nvertex c 0\nvertex d 0\n"
                 "vertex e 1\nvertex f 1\nvertex g 0\n"
                 "edge 1 a b\nedge 2 b c\nedge 3 c a\n"
                 "edge 4 e f\nedge 5 f g\nedge 6 g e\n")
    rc, out, _ = run(capsys, "classify", str(f), "--strict")
    assert rc == INCONCLUSIVE
    assert "abelian: inconclusive" in out
    rc, _, _ = run(capsys, "classify", "k(3,3)", "--colour", "odd",
                   "--strict")
    assert rc == OK


def test_classify_file_colours_are_kept(capsys, tmp_path):
    # a stored colouring must not be overwritten by the default
    f = tmp_path / "odd.txt"
    f.write_text("vertex a 0\nvertex b 0\nvertex c 1\n"
                 "edge 1 a b\nedge 2 b c\n")
    rc, out, _ = run(capsys, "classify", str(f))
    assert rc == OK
    assert "colour: from file" in out
    assert "classically solvable: no" in out
    # an explicit flag overrides the file
    rc, out, _ = run(capsys, "classify", str(f), "--colour", "zero")
    assert "classically solvable: yes" in out


def test_classify_json_graph_file(capsys, tmp_path):
    from gig.graphs import cycle_graph, graph_to_json, parse_colour_spec
    f = tmp_path / "c4.json"
    f.write_text(graph_to_json(parse_colour_spec(cycle_graph(4), "odd")))
    rc, out, _ = run(capsys, "classify", str(f), "--json")
    assert rc == OK
    assert json.loads(out)["j_trivial"]["verdict"] == "yes"


# ---------------------------------------------------------------------------
# order

def test_order_table_values(capsys):
    for spec, order in (("k(3,3)", 16), ("k(5)", 64), ("k(3,4)", 256),
                        ("k(3,5)", 8192)):
        rc, out, _ = run(capsys, "order", spec)
        assert rc == OK
        assert f"order: {order}" in out


def test_order_coloured(capsys):
    rc, out, _ = run(capsys, "order", "k(3,3)", "--coloured", "odd")
    assert rc == OK and "order: 32" in out
    rc, out, _ = run(capsys, "order", "k(3,3)", "--colour", "odd")
    assert rc == OK and "order: 32" in out


def test_order_infinite_inconclusive(capsys):
    rc, out, _ = run(capsys, "order", "petersen")
    assert rc == INCONCLUSIVE
    assert "inconclusive" in out and "infinite" in out


def test_order_overflow_inconclusive(capsys):
    rc, out, _ = run(capsys, "order", "k(3,5)", "--max-cosets", "200")
    assert rc == INCONCLUSIVE
    assert "overflow" in out


def test_order_env_cap_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("GIG_MAX_COSETS", "200")
    rc, _, _ = run(capsys, "order", "k(3,5)")
    assert rc == INCONCLUSIVE
    rc, out, _ = run(capsys, "order", "k(3,5)", "--max-cosets", "100000")
    assert rc == OK and "order: 8192" in out


def test_order_bad_env(capsys, monkeypatch):
    monkeypatch.setenv("GIG_MAX_COSETS", "many")
    rc, _, err = run(capsys, "order", "k(3,3)")
    assert rc == USAGE and "GIG_MAX_COSETS" in err


# ---------------------------------------------------------------------------
# rewrite

def test_rewrite_nf(capsys):
    rc, out, _ = run(capsys, "rewrite", "nf", "--word", "y1,y1")
    assert rc == OK and "normal form: 1" in out
    rc, out, _ = run(capsys, "rewrite", "nf", "--word", "y4,y2,y7")
    assert rc == OK and "(unchanged)" in out
    rc, _, err = run(capsys, "rewrite", "nf", "--word", "q1")
    assert rc == USAGE and "not in system alphabet" in err


def test_rewrite_check(capsys):
    rc, out, _ = run(capsys, "rewrite", "check")
    assert rc == OK
    assert "rules: 46" in out
    assert "terminating: yes; locally confluent: yes;" \
        " relations reduce: yes" in out
    assert "critical pairs joined: 352" in out


def test_rewrite_census(capsys):
    rc, out, _ = run(capsys, "rewrite", "census", "--max-length", "8",
                     "--json")
    assert rc == OK
    assert json.loads(out)["counts"] == [1, 6, 18, 40, 78, 141, 242, 393,
                                         598]


def test_rewrite_kb_complete(capsys):
    rc, out, _ = run(capsys, "rewrite", "kb", "--graph", "cycle(3)",
                     "--colour", "zero")
    assert rc == OK and "status: complete" in out


def test_rewrite_kb_exhausted(capsys):
    rc, out, _ = run(capsys, "rewrite", "kb", "--graph", "petersen",
                     "--max-rules", "20", "--max-orders", "3")
    assert rc == INCONCLUSIVE and "status: exhausted" in out


def test_rewrite_unknown_system(capsys):
    rc, _, err = run(capsys, "rewrite", "check", "--system", "h44")
    assert rc == USAGE and "only `h33`" in err


# ---------------------------------------------------------------------------
# picture

def test_picture_builtin_k33(capsys):
    rc, out, _ = run(capsys, "picture", "builtin", "k33-crossing")
    assert rc == OK
    assert "boundary word: (1, 5, 1, 5)" in out
    assert "character: 111111" in out
    assert "relation: 1 5 1 5 = J" in out


def test_picture_builtin_k5(capsys):
    rc, out, _ = run(capsys, "picture", "builtin", "k5-crossing",
                     "--json")
    assert rc == OK
    obj = json.loads(out)
    assert obj["boundary_word"] == ["1", "4", "1", "4"]
    assert obj["character"] == [1, 1, 1, 1, 1]
    assert obj["relation"] == "1 4 1 4 = J"


def test_picture_out_and_verify_round_trip(capsys, tmp_path):
    f = tmp_path / "pic.json"
    rc, out, _ = run(capsys, "picture", "builtin", "k33-crossing",
                     "--out", str(f))
    assert rc == OK and f"wrote: {f}" in out
    rc, out, _ = run(capsys, "picture", "verify", str(f))
    assert rc == OK
    assert "valid: yes" in out and "relation: 1 5 1 5 = J" in out


def test_picture_verify_rejects_tampered(capsys, tmp_path):
    f = tmp_path / "pic.json"
    run(capsys, "picture", "builtin", "k33-crossing", "--out", str(f))
    obj = json.loads(f.read_text())
    ks = sorted(obj["h_v"])
    obj["h_v"][ks[0]], obj["h_v"][ks[1]] = \
        obj["h_v"][ks[1]], obj["h_v"][ks[0]]
    # a transposition of two vertex labels breaks the edge-set bijections
    f.write_text(json.dumps(obj))
    rc, out, _ = run(capsys, "picture", "verify", str(f))
    assert rc == USAGE and "valid: no" in out


def test_picture_verify_missing_file(capsys, tmp_path):
    rc, _, err = run(capsys, "picture", "verify", str(tmp_path / "no.json"))
    assert rc == USAGE and "cannot load picture" in err


def test_picture_from_embedding_certifies(capsys):
    rc, out, _ = run(capsys, "picture", "from-embedding", "wheel(4)")
    assert rc == OK
    assert "certifies J = 1 for this colouring" in out
    rc, out, _ = run(capsys, "picture", "from-embedding", "wheel(4)",
                     "--colour", "zero", "--json")
    assert rc == OK
    assert json.loads(out)["certifies_j_trivial"] is False


def test_picture_from_embedding_nonplanar(capsys):
    rc, _, err = run(capsys, "picture", "from-embedding", "k(3,3)")
    assert rc == USAGE and "not planar" in err


def test_picture_unknown_builtin(capsys):
    rc, _, err = run(capsys, "picture", "builtin", "k6-crossing")
    assert rc == USAGE and "unknown builtin picture" in err


# ---------------------------------------------------------------------------
# strategy

def test_strategy_verify_k33(capsys):
    rc, out, _ = run(capsys, "strategy", "verify", "--game", "k33",
                     "--closure")
    assert rc == OK
    assert "all checks pass: yes" in out
    assert "multiplicative closure: 32 elements" in out


def test_strategy_verify_k5_json(capsys):
    rc, out, _ = run(capsys, "strategy", "verify", "--game", "k5",
                     "--closure", "--json")
    assert rc == OK
    obj = json.loads(out)
    assert obj["ok"] is True and obj["dimension"] == 8
    assert obj["max_deviation"] < 1e-9
    assert obj["closure_size"] == 128


def test_strategy_verify_tamper_located(capsys):
    rc, out, _ = run(capsys, "strategy", "verify", "--game", "k33",
                     "--tamper")
    assert rc == OK  # the check itself is conclusive
    assert "all checks pass: no" in out
    assert "violation: vertex-product at x" in out
    assert "violation: vertex-product at u" in out


def test_strategy_unknown_game(capsys):
    rc, _, err = run(capsys, "strategy", "verify", "--game", "k7")
    assert rc == USAGE and "unknown game" in err


# ---------------------------------------------------------------------------
# usage plumbing

def test_no_arguments_is_usage(capsys):
    assert main([]) == USAGE
    capsys.readouterr()


def test_help_is_success(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "classify" in out and "strategy" in out


def test_unknown_graph(capsys):
    rc, _, err = run(capsys, "classify", "k9x9")
    assert rc == USAGE
    assert "neither a file nor a builtin" in err


def test_bad_flags(capsys):
    rc, _, err = run(capsys, "order", "k(3,3)", "--max-cosets", "-5")
    assert rc == USAGE and "positive" in err
    rc, _, err = run(capsys, "classify", "k(3,3)", "--jobs", "0")
    assert rc == USAGE and "--jobs" in err
    rc, _, err = run(capsys, "classify", "k(3,3)", "--budget", "2m")
    assert rc == USAGE and "state count" in err
    rc, _, err = run(capsys, "rewrite", "kb", "--graph", "cycle(3)",
                     "--budget=0s")
    assert rc == USAGE and "duration" in err


def test_bad_colour_spec(capsys):
    rc, _, err = run(capsys, "classify", "k(3,3)", "--colour", "x=2")
    assert rc == USAGE and err.startswith("error:")


def test_parse_duration_units():
    assert parse_duration("90") == 90.0
    assert parse_duration("90s") == 90.0
    assert parse_duration("2m") == 120.0
    assert parse_duration("1h") == 3600.0
    assert parse_duration("500ms") == 0.5
    from gig.cli import CliError
    with pytest.raises(CliError):
        parse_duration("soon")
    with pytest.raises(CliError):
        parse_duration("0s")
