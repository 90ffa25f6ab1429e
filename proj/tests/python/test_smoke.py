import json

import monosym


def test_parse_and_arithmetic():
    p = monosym.parse("p3^2 - p1*p5", 2)
    q = monosym.power_sum(2, 3) ** 2 - monosym.power_sum(2, 1) * monosym.power_sum(2, 5)
    assert p == q
    assert p.n_vars == 2
    assert p.degree == 6
    assert not p.is_zero()


def test_eval_and_json_round_trip():
    p = monosym.parse("1/2*x1^2 + x2", 2)
    assert p.eval(["2", "1/3"]) == "7/3"
    back = monosym.Poly.from_json(p.to_json())
    assert back == p
    doc = json.loads(p.to_json())
    assert doc["n"] == 2


def test_membership():
    ok, reason = monosym.is_member(monosym.parse("p3*p1", 4))
    assert ok and reason == ""
    bad, reason = monosym.is_member(monosym.parse("e2", 2))
    assert not bad
    assert "depends on t" in reason


def test_decompose_worked_example():
    d = monosym.decompose(monosym.parse("p3^2", 2))
    assert [str(b) for b in d.basis] == ["p1*p5", "p1^3*p3", "p1^6"]
    assert d.coeffs == ["9/5", "-1", "1/5"]
    assert d.expand() == monosym.parse("p3^2", 2)


def test_dim_and_basis():
    assert monosym.dim(2, 3) == 2
    assert monosym.dim(2, 3) == monosym.dim_kernel(2, 3)
    names = [str(b) for b in monosym.basis(3, 5)]
    assert names == ["p5", "p1^2*p3", "p1^5"]


def test_repr_and_delta():
    assert monosym.parse("delta", 3) == monosym.delta(3)
    r = monosym.repr_in_power_sums(monosym.parse("e2", 2))
    assert r == "1/2*p1^2 - 1/2*p2"


def test_run_suite():
    certs = [json.loads(c) for c in monosym.run_suite(nmax=3, dmax=4, trials=2)]
    assert certs
    assert all(c["status"] == "verified" for c in certs)
    claims = {c["claim"] for c in certs}
    assert "basis" in claims and "counting" in claims
