import pytest

import slie

H10 = """superalgebra H10
even x1 x2 z
odd
[x1,x2] = z
"""


def test_parse_and_print_round_trip():
    a = slie.SuperAlgebra.parse(H10)
    assert a.name == "H10"
    assert a.dim == (3, 0)
    assert a.names == ["x1", "x2", "z"]
    assert slie.SuperAlgebra.parse(str(a)) == a


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="line 4"):
        slie.SuperAlgebra.parse("superalgebra T\neven x\nodd y\n[x,y] = x\n")


def test_multiplier_engines_agree_on_l27():
    a = slie.catalog_entry("L27_3_2")
    tags = slie.multiplier(a)
    assert tags["total"] == 4
    assert tags["tag_count"] == 12
    assert tags["relation_rank"] == 6
    assert tags["free_generators"] == ["m2[x1,x3]", "m3[x1,x4]", "m7[x2,x5]", "m12[x5,x5]"]
    assert slie.multiplier(a, "homology")["dim"] == tags["dim"]


def test_formula_and_direct_sum():
    h = slie.SuperAlgebra.parse(H10)
    assert slie.multiplier(h, "formula")["dim"] == (2, 0)
    odd = slie.catalog_entry("L3_1_2")
    assert slie.multiplier(odd, "formula")["family"] == "H_1"
    a1 = slie.SuperAlgebra.parse("superalgebra A\neven a1\nodd\n")
    law = slie.multiplier_direct_sum(odd, a1)["total"]
    assert law == 4
    assert slie.multiplier(slie.direct_sum(odd, a1))["total"] == law


def test_capability_and_epicenter():
    v = slie.capability(slie.catalog_entry("L2_3_0"))
    assert v["status"] == "Capable"
    assert v["rule"] == "heisenberg-even-m1n0"
    w = slie.capability(slie.catalog_entry("L10_2_2"), grid_bound=1)
    assert w["status"] == "NonCapable"
    assert w["witness"] == ["x1"]
    assert slie.epicenter(slie.catalog_entry("L9_2_2")) == []


def test_not_nilpotent_raises():
    with pytest.raises(slie.NotNilpotent):
        slie.capability(slie.catalog_entry("L22_4_1"))
    assert slie.invariants(slie.catalog_entry("L22_4_1"))["nilpotency_class"] is None


def test_invariants_and_quotient():
    a = slie.catalog_entry("L24_3_2")
    inv = slie.invariants(a)
    assert inv["lcs"][0] == a.dim
    q = slie.quotient(a, ["x3"])
    assert q.dim == (a.dim[0] - 1, a.dim[1])
    with pytest.raises(slie.AlgebraError, match="not an ideal"):
        slie.quotient(a, ["x1"])


def test_catalog_and_cli():
    ids = slie.catalog_ids()
    assert len(ids) == 45
    assert "L1p_2_1" in ids
    with pytest.raises(KeyError):
        slie.catalog_entry("nope")
    assert slie.violations(slie.catalog_entry("L39_1_4"))
    code, out, _ = slie.run(["capability", "catalog:L2_3_0"])
    assert code == 0
    assert "status: Capable" in out.splitlines()
