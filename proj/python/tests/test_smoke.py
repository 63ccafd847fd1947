import braidmono


def test_perm_arithmetic():
    t = braidmono.Perm("[2,1,3]")
    c = braidmono.Perm("[2,3,1]")
    assert t.degree == 3
    assert t.is_transposition()
    assert (t * t).one_line() == "[1,2,3]"
    assert t.inverse() == t
    assert c.inverse().one_line() == "[3,1,2]"
    assert c.cycle_type() == [3]
    assert t.cycles() == "(1 2)"
    # conjugating (1 2) by (1 3) gives (2 3)
    assert t.conjugate(braidmono.Perm("[3,2,1]")).one_line() == "[1,3,2]"


def test_relations():
    rels = braidmono.relations()
    assert len(rels) == 11
    tags = [r["tag"] for r in rels]
    assert tags == ["R2a", "R2b", "R2c", "R2d", "R3a", "R3b", "R3c", "R3d", "R4a", "R4b", "TR"]
    tr = rels[-1]
    assert tr["rhs"] == "s^2"


def test_enumerate_small_degrees():
    two = braidmono.enumerate_degree(2)
    assert two["total_count"] == 16
    assert two["fixed_sigma_count"] == 16
    assert len(two["solutions"]) == 16

    three = braidmono.enumerate_degree(3, threads=2)
    assert three["total_count"] == 240
    assert three["fixed_sigma_count"] == 80
    assert len(three["solutions"]) == 80
    assert all(braidmono.verify(s)["pass"] for s in three["solutions"][:10])


def test_oracle_matches_enumerator():
    oracle = braidmono.brute_force_oracle(3)
    full = braidmono.enumerate_degree(3, fix_sigma=False)
    key = lambda s: (s["sigma"], s["a1"], s["a2"], s["b1"], s["b2"])
    assert sorted(map(key, oracle["solutions"])) == sorted(map(key, full["solutions"]))


def test_classify_degree_three():
    classes = braidmono.classify_degree(3)
    assert len(classes) == 40
    for cls in classes:
        assert cls["orbit_size"] == 6
        assert cls["stabilizer_order"] == 1
        assert not cls["galois"]
        assert cls["image_order"] == 6
        assert cls["k_squared"] == 7
        assert cls["chi"] == 1


def test_r2_candidates():
    sigma = braidmono.Perm("[2,1,3]")
    candidates = braidmono.r2_candidates(sigma)
    assert "[1,2,3]" in candidates
    assert len(candidates) == 4


def test_group_summary():
    order6 = braidmono.summarize_group([braidmono.Perm("[2,1,3]"), braidmono.Perm("[2,3,1]")])
    assert order6["order"] == 6
    assert order6["transitive"]


def test_table():
    rows = braidmono.table(3, threads=2)
    assert [r["total"] for r in rows] == [16, 240]
    assert [r["classes"] for r in rows] == [16, 40]
    assert [r["k_squared"] for r in rows] == [8, 7]
