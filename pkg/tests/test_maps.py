import pytest

from tpcalc.algebra import GradedClass, parse_class, render_class
from tpcalc.chow import ModelError, product_projective
from tpcalc.maps import (
    LNIndex,
    get_model,
    linear_projection_model,
    projection_from_product,
    rational_curve_model,
)
from tpcalc.verify import PROPERTY_MODELS, projection_formula_holds


class TestLNIndex:
    def test_canonical(self):
        assert LNIndex((1, 0, 0)) == (1,)
        assert str(LNIndex(())) == "0"
        assert str(LNIndex((0, 1))) == "01"

    def test_degree(self):
        assert LNIndex(()).degree(kappa=1) == 1
        assert LNIndex((0, 1)).degree(kappa=-1) == 1
        assert LNIndex((2, 1)).degree(kappa=-1) == 3


class TestVeronese:
    def setup_method(self):
        self.f = get_model("veronese-p3")
        self.src = self.f.source.ambient
        self.tgt = self.f.target_ring

    def test_kappa(self):
        assert self.f.kappa == 1

    def test_degree(self):
        assert self.f.pushforward(self.src.one()) == 4 * self.tgt.gen("h")

    def test_pullback(self):
        assert self.f.pullback(self.tgt.gen("h")) == 2 * self.src.gen("h")

    def test_pushforward_of_hyperplane_section(self):
        # the image of a line on the Veronese is a conic in P^3
        assert self.f.pushforward(self.src.gen("h")) == 2 * self.tgt.gen("h") ** 2

    def test_quotient_chern(self):
        assert render_class(self.f.quotient_chern()) == "1 + 5*h + 6*h^2"

    def test_ln_classes(self):
        assert self.f.landweber_novikov(()) == 4 * self.tgt.gen("h")
        assert self.f.landweber_novikov((1,)) == 10 * self.tgt.gen("h") ** 2


class TestScroll:
    def test_degree_four(self):
        f = get_model("scroll-q-p3")
        assert f.pushforward(f.source.ambient.one()) == 4 * f.target_ring.gen("h")

    def test_chern(self):
        f = get_model("scroll-q-p3")
        c = f.quotient_chern()
        ring = f.source.ambient
        assert c == parse_class(ring, "1 + 2*a + 6*b + 4*a*b")


class TestRationalCurve:
    def test_construction(self):
        f = rational_curve_model(4)
        assert f.kappa == 1
        assert f.kind == "rational-curve"

    def test_low_degree_rejected(self):
        with pytest.raises(ModelError):
            rational_curve_model(0)

    def test_line(self):
        f = rational_curve_model(1)
        ring = f.source.ambient
        assert f.quotient_chern() == parse_class(ring, "1 + p")

    def test_pushforwards(self):
        f = rational_curve_model(3)
        src, tgt = f.source.ambient, f.target_ring
        assert f.pushforward(src.one()) == 3 * tgt.gen("h")
        assert f.pushforward(src.gen("p")) == tgt.gen("h") ** 2
        assert f.pullback(tgt.gen("h")) == 3 * src.gen("p")

    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_quotient_chern_general_degree(self, d):
        f = rational_curve_model(d)
        ring = f.source.ambient
        expected = ring.one() + (3 * d - 2) * ring.gen("p")
        assert f.quotient_chern() == expected
        assert f.landweber_novikov((1,)) == (3 * d - 2) * f.target_ring.gen("h") ** 2


class TestIdentityLikeProjection:
    def test_trivial_linear_projection(self):
        p2 = product_projective([2])
        f = linear_projection_model(p2, p2.ambient.gen("h"), 2)
        assert f.kappa == 0
        assert f.pushforward(p2.ambient.one()) == f.target_ring.one()
        assert f.quotient_chern() == p2.ambient.one()

    def test_embedding_class_must_be_degree_one(self):
        p2 = product_projective([2])
        with pytest.raises(ModelError):
            linear_projection_model(p2, p2.ambient.gen("h") ** 2, 3)


class TestProductProjection:
    def test_degenerate_full_space(self):
        amb = product_projective([2, 3])
        f = projection_from_product(amb, (1,))
        src = amb.ambient
        alpha = src.gen("h") ** 2 * src.gen("H")
        assert f.pushforward(alpha) == f.target_ring.gen("H")

    def test_target_must_be_proper_subset(self):
        amb = product_projective([2, 3])
        with pytest.raises(ModelError):
            projection_from_product(amb, (0, 1))
        with pytest.raises(ModelError):
            projection_from_product(amb, ())

    def test_web3_shape(self):
        f = get_model("web3:4")
        assert f.kappa == -1
        assert f.source.dimension == 4
        assert f.target_ring.top_degree == 3

    def test_dual_surface_shape(self):
        f = get_model("dual-surface:3")
        assert f.kappa == -1
        assert f.source.dimension == 4

    @pytest.mark.parametrize("d", range(2, 9))
    def test_discriminant_pipeline(self, d):
        """f_*(c_1^2 - c_2) = 3(d-1)^2 H for the pencil model."""
        f = get_model(f"pencil:{d}")
        value = f.pushforward(f.chern(1) ** 2 - f.chern(2))
        expected = 3 * (d - 1) ** 2 * f.target_ring.gen("H")
        assert value == expected

    def test_pencil_chern_classes(self):
        f = get_model("pencil:5")
        ring = f.source.ambient
        assert f.chern(1) == parse_class(ring, "2*h + H")  # (d-3)h + H at d=5
        assert f.chern(2) == parse_class(ring, "-9*h^2 - 3*h*H")


class TestProjectionFormula:
    @pytest.mark.parametrize("name", PROPERTY_MODELS)
    def test_holds_exactly(self, name):
        assert projection_formula_holds(get_model(name), pairs=100)


class TestDegreeShift:
    @pytest.mark.parametrize("name", PROPERTY_MODELS)
    def test_pushforward_shifts_by_kappa(self, name):
        f = get_model(name)
        src = f.source.ambient
        for d in range(src.top_degree + 1):
            for mono in src.monomials_of_degree(d):
                image = f.pushforward(GradedClass(src, {mono: 1}))
                assert image.is_homogeneous(d + f.kappa)

    @pytest.mark.parametrize("name", PROPERTY_MODELS)
    def test_pullback_preserves_codimension(self, name):
        f = get_model(name)
        tgt = f.target_ring
        for d in range(tgt.top_degree + 1):
            for mono in tgt.monomials_of_degree(d):
                beta = GradedClass(tgt, {mono: 1})
                assert f.pullback(beta).is_homogeneous(d)


class TestLNHomogeneity:
    @pytest.mark.parametrize("name", PROPERTY_MODELS)
    def test_ln_degree(self, name):
        f = get_model(name)
        for I in [(), (1,), (0, 1), (2,), (1, 1), (0, 0, 1)]:
            cls = f.landweber_novikov(I)
            assert cls.is_homogeneous(LNIndex(I).degree(f.kappa))

    @pytest.mark.parametrize("name", PROPERTY_MODELS)
    def test_chern_constant_term(self, name):
        f = get_model(name)
        assert f.quotient_chern().constant_term() == 1


class TestModelRegistry:
    def test_unknown_model(self):
        with pytest.raises(ModelError):
            get_model("grassmannian")

    def test_bad_parameter(self):
        with pytest.raises(ModelError):
            get_model("ratcurve:x")
        with pytest.raises(ModelError):
            get_model("ratcurve:0")

    def test_description_model_matches_named(self):
        described = get_model("product [2,1] ci [(3,1)] -> [1]")
        named = get_model("pencil:3")
        assert described.kappa == named.kappa == -1
        for I in [(), (2,), (0, 1)]:
            assert described.landweber_novikov(I) == named.landweber_novikov(I)

    def test_description_needs_arrow(self):
        with pytest.raises(ModelError):
            get_model("product [2,1] ci [(3,1)]")
