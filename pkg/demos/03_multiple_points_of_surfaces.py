"""Multiple points of surfaces in 3-space: the Steiner Roman surface.

The engine expands multi-point classes as set-partition sums of residual
polynomials, then evaluates them on a model map.  For the Veronese
projection P^2 -> P^3 the classical answers drop out: 6 pinch points, a
double curve of degree 3, exactly one triple point.
"""

from tpcalc import (
    count_points,
    default_db,
    evaluate,
    expand_source,
    expand_target,
    get_model,
    integrate_on,
    multi_type,
    render_class,
    render_expr,
)
from tpcalc.symbolic import c

db = default_db()

print("Universal expansions (kappa = 1):")
for spec in ["A0,A0", "A0,A0,A0", "A0,A1"]:
    t = multi_type(spec, 1)
    print(f"   n_{{{spec}}} =", render_expr(expand_target(t, db)))
    print(f"   m_{{{spec}}} =", render_expr(expand_source(t, db)))

print("\nSteiner (Roman) surface = generic projection of the Veronese:")
veronese = get_model("veronese-p3")
pinch = evaluate(c(2), veronese)
print("   pinch-point class c_2(f)  =", render_class(pinch),
      "-> count", integrate_on(veronese.source, pinch))

double_curve = evaluate(expand_target(multi_type("A0,A0", 1), db), veronese) / 2
print("   double-curve class / 2    =", render_class(double_curve),
      "-> a curve of degree 3 in P^3")

triples = count_points(veronese, multi_type("A0,A0,A0", 1), db)
print("   triple points             =", triples)

print("\nQuartic scroll for comparison (also degree 4 in P^3):")
scroll = get_model("scroll-q-p3")
print("   pinch points =",
      integrate_on(scroll.source, evaluate(c(2), scroll)))
print("   triple points =",
      count_points(scroll, multi_type("A0,A0,A0", 1), db))
