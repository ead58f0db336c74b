import pytest

from tpcalc.algebra import render_class
from tpcalc.maps import get_model
from tpcalc.symbolic import c, fs, parse_expr, s, sify
from tpcalc.tpcore import (
    InconsistentExtraction,
    MissingResidual,
    MultiSingType,
    ResidualDB,
    SingTypeError,
    bell_number,
    count_points,
    default_db,
    evaluate,
    expand_source,
    expand_target,
    extract_residual,
    get_sing_type,
    multi_type,
    register_sing_type,
    residual_a0_family,
    set_partitions,
    sing_ell,
    thom_porteous,
    verify_generating_series,
)


@pytest.fixture
def db():
    return default_db()


class TestRegistry:
    def test_immersion_ell_tracks_kappa(self):
        assert sing_ell("A0", 1) == 1
        assert sing_ell("A0", 3) == 3
        assert sing_ell("A0", 0) == 0

    def test_immersion_negative_kappa_rejected(self):
        with pytest.raises(SingTypeError):
            sing_ell("A0", -1)

    def test_crosscap_and_fold(self):
        assert sing_ell("A1", 1) == 3
        assert sing_ell("A1", -1) == 1

    def test_unknown_requires_registration(self):
        with pytest.raises(SingTypeError):
            sing_ell("A2", 1)
        register_sing_type("A2", 1, 4)
        try:
            assert sing_ell("A2", 1) == 4
        finally:
            from tpcalc import tpcore

            del tpcore._REGISTRY[("A2", 1)]


class TestMultiSingType:
    def test_aut_orders(self):
        t = MultiSingType(("A0", "A0", "A0", "A1", "A1"), 1)
        assert t.aut_order == 12
        assert t.aut_order_rest == 4
        assert t.aut_order // t.aut_order_rest == 3  # entries of the lead type

    def test_ell_total(self):
        assert multi_type("A1,A1,A1", -1).ell_total == 3
        assert multi_type("A0,A1", 1).ell_total == 4

    def test_key_is_sorted(self):
        assert multi_type("A1,A0", 1).key == ("A0", "A1")

    def test_empty_rejected(self):
        with pytest.raises(SingTypeError):
            MultiSingType((), 1)


class TestSetPartitions:
    @pytest.mark.parametrize("r,count", [(1, 1), (2, 2), (3, 5), (4, 15)])
    def test_counts(self, r, count):
        assert len(set_partitions(r)) == count

    def test_counts_match_bell_triangle(self):
        for r in range(1, 8):
            assert len(set_partitions(r)) == bell_number(r)

    def test_blocks_partition_the_set(self):
        for p in set_partitions(4):
            seen = [i for block in p for i in block]
            assert sorted(seen) == [1, 2, 3, 4]

    def test_deterministic(self):
        assert set_partitions(3) == set_partitions(3)

    def test_bad_argument(self):
        with pytest.raises(ValueError):
            set_partitions(0)


class TestResidualDB:
    def test_a0_family_kappa_one(self):
        assert residual_a0_family(1, 1) == 1
        assert residual_a0_family(2, 1) == -c(1)
        assert residual_a0_family(3, 1) == 2 * (c(1) ** 2 + c(2))

    def test_a0_family_kappa_two(self):
        # sum over i: 2^i c_{k-i-1} c_{k+i+1} with c_0 = 1
        assert residual_a0_family(2, 2) == -c(2)
        assert residual_a0_family(3, 2) == 2 * (c(2) ** 2 + c(1) * c(3) + 2 * c(4))

    def test_a0_family_bad_kappa(self):
        with pytest.raises(SingTypeError):
            residual_a0_family(2, 0)

    def test_on_demand_generation(self, db):
        assert db.get(("A0", "A0"), 3) == -c(3)

    def test_missing_reports_key(self, db):
        with pytest.raises(MissingResidual) as err:
            db.get(("A1", "A1"), 1)
        assert "A1" in str(err.value) and "kappa=1" in str(err.value)

    def test_insert_requires_chern_only(self, db):
        with pytest.raises(SingTypeError):
            db.insert(("A0",), 1, s())

    def test_insert_requires_homogeneous(self, db):
        with pytest.raises(SingTypeError):
            db.insert(("A0", "A0"), 1, c(1) + c(2))

    def test_dump_loads_round_trip(self, db):
        text = db.dump()
        again = ResidualDB.loads(text)
        assert again.keys() == db.keys()
        for names, kappa in db.keys():
            assert again.get(names, kappa) == db.get(names, kappa)

    def test_loads_with_base_override(self, db):
        override = "types=[A1] kappa=1 R= 5*c2\n# comment\n"
        merged = ResidualDB.loads(override, base=db)
        assert merged.get(("A1",), 1) == 5 * c(2)
        assert merged.get(("A0", "A1"), 1) == db.get(("A0", "A1"), 1)

    def test_loads_bad_line(self):
        with pytest.raises(ValueError):
            ResidualDB.loads("types=A0 kappa=1 R= 1")


class TestExpandTarget:
    def test_double_point(self, db):
        assert expand_target(multi_type("A0,A0", 1), db) == s() ** 2 - s(1)

    def test_triple_point(self, db):
        expected = s() ** 3 - 3 * s() * s(1) + 2 * s(2) + 2 * s(0, 1)
        assert expand_target(multi_type("A0,A0,A0", 1), db) == expected

    def test_fold_curve(self, db):
        assert expand_target(multi_type("A1", -1), db) == s(2) - s(0, 1)

    def test_missing_entry(self, db):
        with pytest.raises(MissingResidual):
            expand_target(multi_type("A1,A1", 1), db)

    def test_summand_count_is_bell(self, db):
        # with three distinct pushed residuals no monomials collide
        t = multi_type("A0,A0,A0", 1)
        raw_terms = len(expand_target(t, db).terms)
        assert raw_terms <= len(set_partitions(3)) == bell_number(3)


class TestExpandSource:
    @pytest.mark.parametrize("kappa", [1, 2, 3])
    def test_double_point_any_kappa(self, kappa, db):
        t = multi_type("A0,A0", kappa)
        assert expand_source(t, db) == fs() - c(kappa)

    def test_mixed_pair(self, db):
        t = multi_type("A0,A1", 1)
        assert expand_source(t, db) == fs(0, 1) - 2 * c(1) * c(2) - 2 * c(3)

    def test_order_matters_for_source(self, db):
        t = multi_type("A1,A0", 1)
        assert expand_source(t, db) == c(2) * fs() - 2 * c(1) * c(2) - 2 * c(3)

    def test_triple_normalized_matches_table(self, db):
        t = multi_type("A0,A0,A0", 1)
        expected = (fs() ** 2 - fs(1) - 2 * fs() * c(1)
                    + 2 * c(1) ** 2 + 2 * c(2)) / 2
        assert expand_source(t, db) / t.aut_order_rest == expected


class TestHomogeneityAndPushforward:
    def test_all_db_types(self, db):
        for names, kappa in db.keys():
            t = MultiSingType(names, kappa)
            target = expand_target(t, db)
            source = expand_source(t, db)
            assert target.is_homogeneous(t.ell_total, kappa)
            assert source.is_homogeneous(t.ell_total - kappa, kappa)
            assert sify(source) == target

    def test_pushforward_identity_permuted_entries(self, db):
        # the triple needs an A0,A0,A1 residual; a synthetic one suffices
        scratch = db.copy()
        scratch.insert(("A0", "A0", "A1"), 1, 4 * c(1) ** 4 - c(2) * c(2))
        for spec in ["A0,A1", "A1,A0", "A0,A0,A1", "A0,A1,A0", "A1,A0,A0"]:
            t = multi_type(spec, 1)
            assert sify(expand_source(t, scratch)) == expand_target(t, scratch)


class TestExtractResidual:
    def test_round_trip_every_db_entry(self, db):
        for names, kappa in db.keys():
            t = MultiSingType(names, kappa)
            for side in ("source", "target"):
                known = (expand_target(t, db) if side == "target"
                         else expand_source(t, db))
                scratch = db.copy()
                scratch.remove(names, kappa)
                got = extract_residual(t, known, side, scratch)
                assert got == db.get(names, kappa)
                assert scratch.contains(names, kappa)

    def test_table_row_pair_order_independent(self, db):
        known_a = parse_expr("fs_01 - 2*c1*c2 - 2*c3")
        known_b = parse_expr("fs_0*c2 - 2*c1*c2 - 2*c3")
        ra = extract_residual(multi_type("A0,A1", 1), known_a, "source", db.copy())
        rb = extract_residual(multi_type("A1,A0", 1), known_b, "source", db.copy())
        assert ra == rb == -2 * c(1) * c(2) - 2 * c(3)

    def test_triple_point_from_nested_formula(self, db):
        # the residual hiding inside the classical triple-point expression
        t = multi_type("A0,A0,A0", 1)
        known = expand_source(t, db)
        scratch = db.copy()
        scratch.remove(t.key, 1)
        assert extract_residual(t, known, "source", scratch) == 2 * (c(1) ** 2 + c(2))

    def test_degree_mismatch(self, db):
        with pytest.raises(InconsistentExtraction):
            extract_residual(multi_type("A0,A0", 1), s() * s(1), "target", db.copy())

    def test_inconsistent_target(self, db):
        bad = 2 * s() ** 2 - s(1)  # leftover s_0^2 is not a pushed residual
        with pytest.raises(InconsistentExtraction):
            extract_residual(multi_type("A0,A0", 1), bad, "target", db.copy())

    def test_inconsistent_source(self, db):
        bad = fs() ** 2  # cannot be absorbed into a Chern polynomial
        with pytest.raises(InconsistentExtraction):
            extract_residual(multi_type("A0,A0", 1), bad, "source", db.copy())


class TestThomPorteous:
    def test_shipped_cases(self):
        assert thom_porteous(1, 1) == c(2)
        assert thom_porteous(0, 1) == c(1)
        assert thom_porteous(-1, 2) == c(1) ** 2 - c(2)

    def test_two_by_two(self):
        assert thom_porteous(1, 2) == c(3) ** 2 - c(2) * c(4)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            thom_porteous(1, 0)


class TestEvaluate:
    def test_pinch_points(self, db):
        got = evaluate(c(2), get_model("veronese-p3"))
        assert render_class(got) == "6*h^2"

    def test_double_point_class_on_veronese(self, db):
        f = get_model("veronese-p3")
        got = evaluate(fs() - c(1), f)
        assert got == 3 * f.source.ambient.gen("h")

    def test_discriminant(self, db):
        f = get_model("pencil:4")
        got = evaluate(s(2) - s(0, 1), f)
        assert got == 27 * f.target_ring.gen("H")

    def test_target_expression_lands_in_target_ring(self, db):
        f = get_model("veronese-p3")
        got = evaluate(expand_target(multi_type("A0,A0", 1), db), f)
        assert got.ring == f.target_ring
        assert got == 6 * f.target_ring.gen("h") ** 2


class TestCountPoints:
    def test_steiner_triple_point(self, db):
        assert count_points(
            get_model("veronese-p3"), multi_type("A0,A0,A0", 1), db
        ) == 1

    def test_salmon_cubic(self, db):
        assert count_points(
            get_model("dual-surface:3"), multi_type("A1,A1,A1", -1), db
        ) == 45

    def test_roberts_quartic(self, db):
        assert count_points(
            get_model("web3:4"), multi_type("A1,A1,A1", -1), db
        ) == 675

    def test_wrong_dimension(self, db):
        with pytest.raises(ValueError, match="zero-dimensional"):
            count_points(get_model("veronese-p3"), multi_type("A0,A0", 1), db)


class TestGeneratingSeries:
    def test_immersions(self, db):
        assert verify_generating_series([get_sing_type("A0", 1)], 3, db)

    def test_folds(self, db):
        assert verify_generating_series([get_sing_type("A1", -1)], 3, db)

    def test_trivial_truncation(self, db):
        assert verify_generating_series([get_sing_type("A0", 1)], 1, db)

    def test_mixed_types(self, db):
        # needs a pair entry for A1,A1 at kappa=1; any homogeneous stand-in
        # works because the identity is formal in the pushed residuals
        scratch = db.copy()
        scratch.insert(("A1", "A1"), 1, c(1) ** 5 - 3 * c(2) * c(3))
        types = [get_sing_type("A0", 1), get_sing_type("A1", 1)]
        assert verify_generating_series(types, 2, scratch)

    def test_missing_entries(self, db):
        scratch = db.copy()
        scratch.remove(("A1", "A1"), -1)
        with pytest.raises(MissingResidual):
            verify_generating_series([get_sing_type("A1", -1)], 2, scratch)

    def test_kappa_must_agree(self, db):
        types = [get_sing_type("A0", 1), get_sing_type("A1", -1)]
        with pytest.raises(ValueError):
            verify_generating_series(types, 2, db)


class TestTwoRouteAgreement:
    def test_triple_point_nested_vs_expansion(self, db):
        from tpcalc.verify import nested_triple_point_class

        t = multi_type("A0,A0,A0", 1)
        for name in ["veronese-p3", "scroll-q-p3", "ratcurve:2", "ratcurve:5"]:
            f = get_model(name)
            assert evaluate(expand_source(t, db), f) == nested_triple_point_class(f)
