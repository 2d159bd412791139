import pytest

import inalg


def test_twisted_cubic_basis():
    gb = inalg.groebner_basis(["x^2 - y", "x*y - z"], ["x", "y", "z"], "lex")
    assert gb == ["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"]
    assert sorted(inalg.initial_ideal(["x^2 - y", "x*y - z"], ["x", "y", "z"], "lex")) == [
        "x*y",
        "x*z",
        "x^2",
        "y^3",
    ]


def test_leading_monomials_depend_on_order():
    xs = ["x1", "x2", "x3", "x4"]
    f = "x1 + x2*x4 + x3^2"
    assert inalg.leading_monomial(f, xs, "lex") == "x1"
    assert inalg.leading_monomial(f, xs, "deglex") == "x2*x4"
    assert inalg.leading_monomial(f, xs, "revlex") == "x3^2"


def test_sagbi_truncation():
    res = inalg.sagbi_complete(["x + y", "x*y", "x*y^2"], ["x", "y"], "deglex", 6)
    assert res["truncated_at"] == 6
    assert res["initial"] == ["x", "x*y", "x*y^2", "x*y^3", "x*y^4", "x*y^5"]
    assert not inalg.sagbi_test(["x + y", "x*y", "x*y^2"], ["x", "y"], "deglex")["passed"]


def test_weights_and_certificates():
    ok = inalg.find_weight([("x1", "x2"), ("x2", "x3")], ["x1", "x2", "x3"])
    a = ok["weight"]
    assert ok["feasible"] and a[0] > a[1] > a[2] > 0
    bad = inalg.find_weight([("x", "y"), ("y", "x")], ["x", "y"])
    assert not bad["feasible"] and bad["certificate"] == [1, 1]
    w = inalg.order_weight(["x^2 - y", "x*y - z"], ["x", "y", "z"], "lex")
    assert 2 * w[0] > w[1] and w[0] + w[1] > w[2]


def test_hilbert_and_dimension():
    num, den = inalg.hilbert_series(["x^2", "x*y"], ["x", "y"])
    assert num == [1, 0, -2, 1] and den == [1, 1]
    assert inalg.hilbert_function(["x^2", "x*y"], ["x", "y"], d_max=4) == [1, 2, 1, 1, 1]
    assert inalg.krull_dimension(["x*y", "y*z"], ["x", "y", "z"]) == 2


def test_betti_of_maximal_ideal():
    assert inalg.betti_numbers(["x", "y"], ["x", "y"]) == {(0, 0): 1, (1, 1): 2, (2, 2): 1}


def test_cli_and_scenarios():
    code, out, err = inalg.execute("gb", "ring x, y, z\norder lex\nideal x^2 - y, x*y - z\n")
    assert code == 0 and "y^3 - z^2" in out and err == ""
    code, out, _ = inalg.run(["weight", "-"], "ring x, y, z\npairs\nend\n")
    assert code == 0 and out == "1 1 1\n"
    assert "founda" in inalg.scenario_names()
    passed, text = inalg.verify("founda")
    assert passed and text.startswith("PASS")


def test_errors_are_raised():
    with pytest.raises(inalg.ParseError):
        inalg.groebner_basis(["x + w"], ["x", "y"])
    with pytest.raises(inalg.Error):
        inalg.leading_monomial("x", ["x"], "lex(y)")
