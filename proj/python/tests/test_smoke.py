import pathlib

import pytest

import rankmatch

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_matrix_quantities():
    assert rankmatch.rank([[1, 1], [1, 1]], 2) == 1
    assert rankmatch.det([[0, 1], [1, 0]], 3) == 2
    assert rankmatch.pfaffian([[0, 2], [3, 0]], 5) == 2
    c = [[0, 1, 1, 0], [2, 0, 0, 1], [2, 0, 0, 1], [0, 2, 2, 0]]
    assert rankmatch.pfaffian(c, 3) == rankmatch.pfaffian_combinatorial(c, 3) == 0
    with pytest.raises(rankmatch.DomainError):
        rankmatch.pfaffian([[1, 0], [0, 1]], 3)


def test_graph_quantities():
    assert rankmatch.nu(3, [(1, 2), (3,)]) == 2
    assert rankmatch.mu(3, [(1, 2), (3,)]) == 3
    assert rankmatch.max_matching(2, [(1,), (1, 2)]) == [(1, 2)]
    assert rankmatch.u_a(6, 4) == 10
    assert rankmatch.u_s(6, 3) == 7


def test_gf2_counterexamples():
    for which, (m, rho) in ((1, (2, 1)), (2, (3, 2))):
        s = rankmatch.Space.counterexample(which)
        g = s.leading_graph()
        assert rankmatch.mu(s.n, g) == m
        assert s.max_rank() == rho


def test_space_file_round_trip():
    s = rankmatch.load_space(DATA / "gf2_affine.space")
    assert s.n == 2 and s.p == 2 and s.kind == "symmetric"
    assert s.leading_graph() == [(1, 2)]
    assert rankmatch.Space.parse(s.serialize()) == s
    doubled = s.double()
    assert doubled.leading_graph() == [(1, 4)]
    assert doubled.max_rank() == 2 * s.max_rank()
    with pytest.raises(rankmatch.ParseError, match="line 6"):
        rankmatch.load_space(DATA / "bad_entry.space")


def test_witness():
    text = (DATA / "gf2_linear.space").read_text().replace("field 2", "field 3")
    w = rankmatch.Space.parse(text).witness()
    assert w["found"] and w["rank"] == 3 and w["point"] == [1, 1]
    with pytest.raises(rankmatch.DomainError):
        rankmatch.load_space(DATA / "gf2_linear.space").witness()


def test_extremal():
    u = rankmatch.Space.extremal("u2s", 3, 6, 3)
    assert u.dimension() == 7
    assert u.max_rank() == 3


def test_verify_reports():
    r = rankmatch.verify("counterexamples")
    assert r["fail"] == 0 and r["pass"] == 2
    r = rankmatch.verify("thm1", trials=20, seed=3)
    assert r["suite"] == "thm1" and r["fail"] == 0
    assert rankmatch.verify_json("thm2", trials=20, workers=1) == rankmatch.verify_json("thm2", trials=20, workers=2)
    with pytest.raises(rankmatch.DomainError, match=r"\|F\| >= 3"):
        rankmatch.verify("thm1", p=2)


def test_cli():
    code, out, _ = rankmatch.run_cli(["compute", "ua", "--n", "6", "--k", "4"])
    assert (code, out) == (0, "10\n")
    code, _, err = rankmatch.run_cli(["verify", "thm1", "--p", "2"])
    assert code == 4 and "|F| >= 3" in err
