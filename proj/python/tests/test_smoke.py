import opcyl


def test_presentations_list():
    assert "ainf" in opcyl.presentations
    assert "unital-nu:m=2" in opcyl.presentations


def test_differential_values():
    p = opcyl.Presentation("ainf")
    d3 = p.boundary("mu_3")
    expect = p.parse("mu_2 o2 mu_2 - mu_2 o1 mu_2")
    assert d3 == expect
    assert p.diff("mu_2 o1 mu_2").is_zero()
    assert p.check_d_squared(4)


def test_cylinder_and_homotopy():
    p = opcyl.Presentation("lambda-ainf")
    h = p.homotopy("i1:mu_2 o1 i1:mu_2 + i1:mu_2 o2 i1:mu_2")
    expect = p.parse("sigma:mu_2{i1:mu_2} - i0:mu_2{sigma:mu_2}")
    assert h == expect

    ds2 = p.cyl_diff("sigma mu_2")
    assert ds2 == p.parse("i0:mu_2 - i1:mu_2")
    assert p.cylinder_d_squared(2)


def test_element_algebra():
    p = opcyl.Presentation("ainf")
    m2 = p.parse("mu_2")
    comb = m2.compose(1, m2)
    assert comb.arity == 3
    assert (comb - comb).is_zero()
    assert 2 * m2 - m2 == m2
    assert m2.brace([m2]) == p.parse("mu_2{mu_2}")
    assert "mu_2" in str(comb)


def test_linear_and_verify():
    ad = opcyl.Presentation("assoc-der")
    assert ad.is_linear(4)
    results = opcyl.verify("linear", max_arity=4)
    assert all(ok for _, ok, _ in results)


def test_json_round_trip():
    p = opcyl.Presentation("ainf")
    e = p.cyl_diff("sigma mu_3")
    j = e.json()
    assert '"coeff"' in j and '"tree"' in j
