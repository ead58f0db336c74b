"""Truncated polynomial rings as intersection rings of projective spaces.

Everything is exact: coefficients are rationals, generators are nilpotent
hyperplane classes, and integration reads off the coefficient of the top
monomial.
"""

from tpcalc import (
    complete_intersection,
    integrate_on,
    integrate_top,
    invert_unit,
    make_ring,
    parse_class,
    product_projective,
    render_class,
)

# The ring Q[h]/(h^3) models P^2: h is the hyperplane class.
P2 = make_ring([("h", 1, 2)])
h = P2.gen("h")
print("In P^2:  (1+h)^3      =", render_class((1 + h) ** 3))
print("         1/(1+h)      =", render_class(invert_unit(1 + h)))
print("         int h^2      =", integrate_top(P2, h**2))

# Products of projective spaces multiply their rings together.
P2xP3 = make_ring([("h", 1, 2), ("H", 1, 3)])
p = parse_class(P2xP3, "1 + h + H")
q = parse_class(P2xP3, "1 - h")
print("\nIn P^2 x P^3:  (1+h+H)(1-h) =", render_class(p * q))
print("               int h^2*H^3   =",
      integrate_top(P2xP3, parse_class(P2xP3, "h^2*H^3")))

# Variety models carry tangent classes; adjunction handles hypersurfaces.
print("\nTangent classes by adjunction:")
plane = product_projective([2])
conic = complete_intersection(plane, [(2,)])
print("  conic in P^2:       c(TX) =", render_class(conic.tangent_total),
      " dim =", conic.dimension)
c1 = conic.tangent_total.graded_component(1)
print("  Euler char of conic: int c1 =", integrate_on(conic, c1), "(a P^1)")

space = product_projective([3])
quadric = complete_intersection(space, [(2,)])
c2 = quadric.tangent_total.graded_component(2)
print("  quadric in P^3:      int c2 =", integrate_on(quadric, c2),
      "(it is P^1 x P^1)")

torus_like = product_projective([1, 1], names=("a", "b"))
top = torus_like.tangent_total.graded_component(2)
print("  P^1 x P^1 directly:  int c2 =", integrate_on(torus_like, top))
