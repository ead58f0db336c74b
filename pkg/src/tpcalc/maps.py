"""Proper-map models: pullback, pushforward, quotient Chern classes,
Landweber-Novikov classes.

Three kinds of model are shipped:

* projections of a complete intersection in a product of projective spaces
  onto a subset of the factors (pushforward = fiber integration against the
  fundamental class);
* generic linear projections X -> P^t of a smooth variety embedded by a
  degree-1 class e (pushforward via the degree rule
  f_*(alpha) = (int_X alpha * e^(dim X - c)) * h^(t - dim X + c));
* parametrized rational plane curves of degree d (a linear projection of P^1
  with e = d*p onto P^2).

Every model exposes exact pullback/pushforward satisfying the projection
formula on the nose, which the test suite checks on random classes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import re

from .algebra import GradedClass, RingSpec, make_ring
from .chow import (
    ModelError,
    VarietyModel,
    complete_intersection,
    integrate_on,
    parse_variety,
    product_projective,
)
from .symbolic import canon_index, index_c_degree, index_str


class LNIndex(tuple):
    """A Landweber-Novikov index: exponents (i_1, ..., i_k), trailing zeros
    trimmed; the empty index prints as "0" and stands for the pushforward
    of 1."""

    def __new__(cls, exponents: Iterable[int] = ()):
        return super().__new__(cls, canon_index(exponents))

    @property
    def c_degree(self) -> int:
        return index_c_degree(self)

    def degree(self, kappa: int) -> int:
        return kappa + self.c_degree

    def __str__(self) -> str:
        return index_str(self)

    def __repr__(self) -> str:
        return f"LNIndex({tuple(self)})"


class MapModel:
    """Common behaviour: quotient Chern class, LN classes, caching."""

    kind = "abstract"

    def __init__(self, source: VarietyModel, target_ring: RingSpec):
        self.source = source
        self.target_ring = target_ring
        self.kappa = target_ring.top_degree - source.dimension
        self._chern_total: GradedClass | None = None
        self._ln_cache: dict[tuple[int, ...], GradedClass] = {}

    # subclasses implement these three
    def pullback(self, beta: GradedClass) -> GradedClass:
        raise NotImplementedError

    def pushforward(self, alpha: GradedClass) -> GradedClass:
        raise NotImplementedError

    def target_tangent_total(self) -> GradedClass:
        raise NotImplementedError

    def quotient_chern(self) -> GradedClass:
        """Total class of f^*TY - TX in the source's ambient ring."""
        if self._chern_total is None:
            pulled = self.pullback(self.target_tangent_total())
            self._chern_total = pulled * self.source.tangent_total.invert()
        return self._chern_total

    def chern(self, j: int) -> GradedClass:
        """c_j(f); c_0 = 1, c_{<0} = 0."""
        if j < 0:
            return self.source.ambient.zero()
        if j == 0:
            return self.source.ambient.one()
        return self.quotient_chern().graded_component(j)

    def landweber_novikov(self, I: Iterable[int]) -> GradedClass:
        """s_I(f) = f_*(c_1^{i_1} c_2^{i_2} ...) in the target ring."""
        I = canon_index(I)
        if I not in self._ln_cache:
            prod = self.source.ambient.one()
            for j, e in enumerate(I, start=1):
                if e:
                    prod = prod * self.chern(j) ** e
            self._ln_cache[I] = self.pushforward(prod)
        return self._ln_cache[I]

    def __repr__(self) -> str:
        return f"<{self.kind} map, kappa={self.kappa}>"


class ProductProjectionMap(MapModel):
    """Projection of X inside P^{n_1} x ... x P^{n_k} onto a subset of factors."""

    kind = "product-projection"

    def __init__(self, X: VarietyModel, target_factors: Sequence[int]):
        factors = tuple(sorted(set(int(i) for i in target_factors)))
        k = len(X.factor_dims)
        if not factors:
            raise ModelError("need at least one target factor")
        if any(i < 0 or i >= k for i in factors):
            raise ModelError("target factor index out of range")
        if len(factors) == k:
            raise ModelError("target equals the full ambient product")
        ambient = X.ambient
        target_ring = make_ring(
            [(ambient.names[i], 1, X.factor_dims[i]) for i in factors]
        )
        self.target_factors = factors
        self.fiber_factors = tuple(i for i in range(k) if i not in factors)
        super().__init__(X, target_ring)

    def target_tangent_total(self) -> GradedClass:
        t = self.target_ring.one()
        for name, dim in zip(self.target_ring.names, self.target_ring.bounds):
            t = t * (self.target_ring.one() + self.target_ring.gen(name)) ** (dim + 1)
        return t

    def pullback(self, beta: GradedClass) -> GradedClass:
        if beta.ring != self.target_ring:
            raise ModelError("pullback argument lives in the wrong ring")
        ambient = self.source.ambient
        terms = {}
        for mono, coeff in beta.terms.items():
            amb = [0] * len(ambient.gens)
            for pos, e in zip(self.target_factors, mono):
                amb[pos] = e
            terms[tuple(amb)] = coeff
        return GradedClass(ambient, terms)

    def pushforward(self, alpha: GradedClass) -> GradedClass:
        """Multiply by [X], then integrate the fibered factors to the top."""
        if alpha.ring != self.source.ambient:
            raise ModelError("pushforward argument lives in the wrong ring")
        beta = alpha * self.source.fundamental
        bounds = self.source.ambient.bounds
        terms: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in beta.terms.items():
            if any(mono[i] != bounds[i] for i in self.fiber_factors):
                continue
            tgt = tuple(mono[i] for i in self.target_factors)
            terms[tgt] = terms.get(tgt, Fraction(0)) + coeff
        return GradedClass(self.target_ring, terms)


class LinearProjectionMap(MapModel):
    """Generic linear projection of an embedded variety to P^{target_dim}."""

    kind = "linear-projection"

    def __init__(self, X: VarietyModel, e: GradedClass, target_dim: int,
                 target_name: str = "h"):
        if e.ring != X.ambient:
            raise ModelError("embedding class lives in the wrong ring")
        if e.is_zero() or not e.is_homogeneous(1):
            raise ModelError("embedding class must be homogeneous of degree 1")
        self.embedding = e
        self.target_dim = int(target_dim)
        target_ring = make_ring([(target_name, 1, self.target_dim)])
        super().__init__(X, target_ring)

    def target_tangent_total(self) -> GradedClass:
        ring = self.target_ring
        return (ring.one() + ring.gen(ring.names[0])) ** (self.target_dim + 1)

    def pullback(self, beta: GradedClass) -> GradedClass:
        if beta.ring != self.target_ring:
            raise ModelError("pullback argument lives in the wrong ring")
        out = self.source.ambient.zero()
        for mono, coeff in beta.terms.items():
            out = out + coeff * self.embedding ** mono[0]
        return out

    def pushforward(self, alpha: GradedClass) -> GradedClass:
        if alpha.ring != self.source.ambient:
            raise ModelError("pushforward argument lives in the wrong ring")
        n = self.source.dimension
        ring = self.target_ring
        h = ring.gen(ring.names[0])
        out = ring.zero()
        for cdeg, piece in alpha.components().items():
            if cdeg > n or cdeg + self.kappa > self.target_dim or cdeg + self.kappa < 0:
                continue
            weight = integrate_on(self.source, piece * self.embedding ** (n - cdeg))
            out = out + weight * h ** (cdeg + self.kappa)
        return out


def projection_from_product(X: VarietyModel,
                            target_factors: Sequence[int]) -> ProductProjectionMap:
    return ProductProjectionMap(X, target_factors)


def linear_projection_model(X: VarietyModel, e: GradedClass,
                            target_dim: int) -> LinearProjectionMap:
    return LinearProjectionMap(X, e, target_dim)


def rational_curve_model(d: int) -> LinearProjectionMap:
    """Generic degree-d parametrized rational plane curve P^1 -> P^2."""
    if d < 1:
        raise ModelError("curve degree must be >= 1")
    p1 = product_projective([1], names=("p",))
    model = LinearProjectionMap(p1, d * p1.ambient.gen("p"), 2)
    model.kind = "rational-curve"
    model.curve_degree = d
    return model


# -- module-level operation aliases matching the published surface ----------


def quotient_chern(f: MapModel) -> GradedClass:
    return f.quotient_chern()


def landweber_novikov(f: MapModel, I: Iterable[int]) -> GradedClass:
    return f.landweber_novikov(I)


def pushforward(f: MapModel, alpha: GradedClass) -> GradedClass:
    return f.pushforward(alpha)


def pullback(f: MapModel, beta: GradedClass) -> GradedClass:
    return f.pullback(beta)


# -- named built-in models ---------------------------------------------------


def _veronese_p3() -> LinearProjectionMap:
    p2 = product_projective([2])
    return LinearProjectionMap(p2, 2 * p2.ambient.gen("h"), 3)


def _scroll_q_p3() -> LinearProjectionMap:
    quadric = product_projective([1, 1], names=("a", "b"))
    e = quadric.ambient.gen("a") + 2 * quadric.ambient.gen("b")
    return LinearProjectionMap(quadric, e, 3)


def _pencil(d: int) -> ProductProjectionMap:
    ambient = product_projective([2, 1])
    X = complete_intersection(ambient, [(d, 1)])
    return ProductProjectionMap(X, (1,))


def _web3(d: int) -> ProductProjectionMap:
    ambient = product_projective([2, 3])
    X = complete_intersection(ambient, [(d, 1)])
    return ProductProjectionMap(X, (1,))


def _dual_surface(d: int) -> ProductProjectionMap:
    ambient = product_projective([3, 3])
    X = complete_intersection(ambient, [(d, 0), (1, 1)])
    return ProductProjectionMap(X, (1,))


_PARAMETRIC_MODELS = {
    "ratcurve": (rational_curve_model, 1),
    "pencil": (_pencil, 1),
    "web3": (_web3, 1),
    "dual-surface": (_dual_surface, 1),
}

_FIXED_MODELS = {
    "veronese-p3": _veronese_p3,
    "scroll-q-p3": _scroll_q_p3,
}


def model_names() -> list[str]:
    return sorted(_FIXED_MODELS) + [f"{k}:<d>" for k in sorted(_PARAMETRIC_MODELS)]


_PROJECTION_DESC_RE = re.compile(r"^(.*?)\s*->\s*\[\s*([0-9,\s]+?)\s*\]\s*$")


def get_model(name: str) -> MapModel:
    """Resolve a model name.

    Accepts the built-in names ('veronese-p3', 'pencil:4', ...) or a factor
    projection described in the variety grammar with a target-factor list,
    e.g. 'product [2,1] ci [(3,1)] -> [1]'.
    """
    name = name.strip()
    if name in _FIXED_MODELS:
        return _FIXED_MODELS[name]()
    if name.startswith("product"):
        m = _PROJECTION_DESC_RE.match(name)
        if not m:
            raise ModelError(
                f"a projection description needs '-> [factors]': {name!r}"
            )
        X = parse_variety(m.group(1))
        factors = [int(x) for x in m.group(2).split(",") if x.strip()]
        return ProductProjectionMap(X, factors)
    if ":" in name:
        head, _, arg = name.partition(":")
        if head in _PARAMETRIC_MODELS:
            builder, min_d = _PARAMETRIC_MODELS[head]
            try:
                d = int(arg)
            except ValueError:
                raise ModelError(f"bad parameter in model name {name!r}") from None
            if d < min_d:
                raise ModelError(f"model {head} needs parameter >= {min_d}")
            return builder(d)
    raise ModelError(
        f"unknown model {name!r}; available: {', '.join(model_names())} "
        "or a description like 'product [2,1] ci [(3,1)] -> [1]'"
    )
