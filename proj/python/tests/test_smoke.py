import json

try:
    import secdet as sd
except ImportError:
    import _secdet as sd


def test_version():
    assert sd.__version__


def test_poly_parsing_roundtrip():
    R = sd.Ring(["x0", "x1", "x2", "x3"], "q")
    p = sd.parse("3*x1^2*x0 - x2", R)
    assert str(p) == "3*x0*x1^2 - x2"
    assert sd.parse(str(p), R) == p
    assert sd.parse("0", R).is_zero()


def test_twisted_cubic_hilbert():
    tc = sd.make_scroll([3], "gf:32003", 1)
    M = sd.family_presentation(tc)
    assert (M.rows, M.cols) == (2, 3)
    I = sd.minors_ideal(M, 2)
    h = I.hilbert()
    assert h["codimension"] == 2
    assert h["degree"] == "3"
    assert h["numerator"] == "1 - 3*t^2 + 2*t^3"
    assert I.contains("x0*x2 - x1^2")
    assert not I.contains("x0")


def test_one_generic_and_witness():
    tc = sd.make_scroll([3], "gf:32003", 1)
    M = sd.family_presentation(tc)
    assert sd.is_one_generic(M)["one_generic"]
    R = sd.Ring(["x", "y"], "q")
    bad = sd.parse_matrix_over("linmat 2 2\nx, y;\ny, x\n", R)
    res = sd.is_one_generic(bad)
    assert not res["one_generic"]
    v, w = res["witness"]
    assert len(v) == 2 and len(w) == 2


def test_terracini_and_min_degree():
    v = sd.make_veronese(3, 2)
    t = sd.terracini(v, 2)
    assert t["e"] == 3
    assert t["dim_secant"] == 6
    assert sd.min_degree(3, 2) == 10
    assert sd.min_degree(4, 2) == 15


def test_certify_veronese_type():
    r6 = sd.make_scroll([6], "gf:32003", 2)
    H = sd.rnc_veronese_matrix(r6, 2)
    assert H.symmetric and (H.rows, H.cols) == (4, 4)
    res = sd.certify(r6, H, 2, trials=50)
    assert res["verdict"] == "veronese"
    assert res["hilbert"]["degree"] == "10"


def test_factorization_base_divisor():
    s15 = sd.make_scroll([1, 5], "gf:32003", 2)
    M = sd.family_presentation(s15)
    f = sd.factor_presentation(s15, M)
    assert f["u"] == "l2"
    assert f["s"] == ["s^2", "s*t", "t^2"]
    assert f["t"] == ["s^3", "s^2*t", "s*t^2", "t^3"]


def test_glue_roundtrip():
    r5 = sd.make_scroll([5], "gf:32003", 1)
    M = sd.family_presentation(r5)
    assert sd.glue_roundtrip(r5, M, 1, "scroll1")


def test_en_numerator():
    assert sd.en_numerator(1, 2) == "1 - 3*t^2 + 2*t^3"
    rows = sd.en_betti(2, 3)
    assert rows[1]["rank"] == "10"
    assert rows[1]["twist"] == "3" or rows[1]["twist"] == 3
