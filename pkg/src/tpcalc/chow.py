"""Variety models: products of projective spaces and complete intersections.

A model consists of an ambient truncated ring (the intersection ring of
P^{n_1} x ... x P^{n_k}), the degree-1 divisor classes cutting the variety
out, and the total tangent class as an ambient-ring representative obtained
by adjunction.  Classes on the variety are always ambient representatives;
every downstream operation factors through multiplication by the fundamental
class, so representative ambiguity never leaks.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import GradedClass, RingSpec, integrate_top, make_ring


class ModelError(ValueError):
    """Raised for ill-formed variety or map models."""


_DEFAULT_NAME_SETS = {1: ("h",), 2: ("h", "H")}


def _factor_names(count: int, names: Sequence[str] | None) -> tuple[str, ...]:
    if names is not None:
        names = tuple(names)
        if len(names) != count:
            raise ModelError("one generator name per projective factor")
        return names
    if count in _DEFAULT_NAME_SETS:
        return _DEFAULT_NAME_SETS[count]
    return tuple(f"h{i + 1}" for i in range(count))


class VarietyModel:
    """A complete intersection inside a product of projective spaces."""

    __slots__ = ("ambient", "factor_dims", "divisors", "dimension",
                 "tangent_total", "fundamental")

    def __init__(self, ambient: RingSpec, factor_dims: tuple[int, ...],
                 divisors: tuple[GradedClass, ...], dimension: int,
                 tangent_total: GradedClass, fundamental: GradedClass):
        if tangent_total.constant_term() != 1:
            raise ModelError("tangent class must have constant term 1")
        self.ambient = ambient
        self.factor_dims = factor_dims
        self.divisors = divisors
        self.dimension = dimension
        self.tangent_total = tangent_total
        self.fundamental = fundamental

    def __repr__(self) -> str:
        factors = "x".join(f"P{d}" for d in self.factor_dims)
        if self.divisors:
            return f"<CI of {len(self.divisors)} divisors in {factors}>"
        return f"<{factors}>"


def product_projective(dims: Iterable[int],
                       names: Sequence[str] | None = None) -> VarietyModel:
    """The product P^{d_1} x ... x P^{d_k} with its Euler-sequence tangent class."""
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ModelError("need at least one projective factor")
    if any(d < 1 for d in dims):
        raise ModelError("projective factors need dimension >= 1")
    gen_names = _factor_names(len(dims), names)
    ring = make_ring([(n, 1, d) for n, d in zip(gen_names, dims)])
    tangent = ring.one()
    for name, d in zip(gen_names, dims):
        tangent = tangent * (ring.one() + ring.gen(name)) ** (d + 1)
    return VarietyModel(ring, dims, (), sum(dims), tangent, ring.one())


def complete_intersection(ambient: VarietyModel,
                          multidegrees: Iterable[Sequence[int] | GradedClass]
                          ) -> VarietyModel:
    """Cut a complete intersection out of a product of projective spaces.

    Each multidegree is either a degree-1 ambient class or an integer vector
    (d_1, ..., d_k) standing for sum d_i * g_i.  The tangent class follows by
    adjunction: c(TX) = c(T_ambient) / prod (1 + L_j).
    """
    if ambient.divisors:
        raise ModelError("ambient model must be a bare product of projective spaces")
    ring = ambient.ambient
    classes: list[GradedClass] = []
    for md in multidegrees:
        if isinstance(md, GradedClass):
            L = md
        else:
            vec = tuple(int(x) for x in md)
            if len(vec) != len(ring.gens):
                raise ModelError("multidegree vector has wrong length")
            L = ring.zero()
            for coeff, name in zip(vec, ring.names):
                L = L + coeff * ring.gen(name)
        if L.ring != ring:
            raise ModelError("divisor class lives in the wrong ring")
        if L.is_zero() or not L.is_homogeneous(1):
            raise ModelError("divisor classes must be homogeneous of degree 1")
        classes.append(L)
    if len(classes) >= ambient.dimension:
        raise ModelError("too many divisors: dimension would drop to zero or below")
    tangent = ambient.tangent_total
    fundamental = ring.one()
    denom = ring.one()
    for L in classes:
        denom = denom * (ring.one() + L)
        fundamental = fundamental * L
    tangent = tangent * denom.invert()
    return VarietyModel(ring, ambient.factor_dims, tuple(classes),
                        ambient.dimension - len(classes), tangent, fundamental)


def integrate_on(variety: VarietyModel, p: GradedClass) -> Fraction:
    """Integral over the variety of an ambient representative.

    Factors through the ambient integral against the fundamental class:
    int_X alpha = int_ambient alpha * [X].
    """
    return integrate_top(variety.ambient, p * variety.fundamental)


# -- textual model descriptions ----------------------------------------------
#
# Grammar used by the CLI: `product [2,3]` for a bare product, optionally
# followed by `ci [(4,1),(1,1)]` with one integer multidegree vector per
# divisor, e.g. `product [3,3] ci [(3,0),(1,1)]`.

_DESCRIPTION_RE = re.compile(
    r"^\s*product\s*\[\s*([0-9,\s]+?)\s*\]\s*(?:ci\s*\[\s*(.+?)\s*\]\s*)?$"
)
_VECTOR_RE = re.compile(r"\(\s*([-0-9,\s]*?)\s*\)")


def parse_variety(text: str) -> VarietyModel:
    """Parse a model description like 'product [2,1] ci [(3,1)]'."""
    m = _DESCRIPTION_RE.match(text)
    if not m:
        raise ModelError(
            f"cannot parse variety description {text!r}; expected "
            "'product [n1,n2,...]' optionally followed by 'ci [(..),(..)]'"
        )
    dims = [int(x) for x in m.group(1).split(",") if x.strip()]
    ambient = product_projective(dims)
    if m.group(2) is None:
        return ambient
    vectors = _VECTOR_RE.findall(m.group(2))
    if not vectors:
        raise ModelError(f"no multidegree vectors in {text!r}")
    multidegrees = [
        tuple(int(x) for x in vec.split(",") if x.strip()) for vec in vectors
    ]
    return complete_intersection(ambient, multidegrees)
