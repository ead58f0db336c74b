"""Discriminants: maps of relative dimension one (kappa = -1).

For a family of divisors, the fold locus A1 maps onto the discriminant.
Evaluating the universal expansions on incidence models reproduces two
19th-century counts exactly:

* Salmon: triple points of the dual surface of a smooth degree-d surface;
* Roberts: three-nodal curves in a general web of degree-d plane curves.
"""

from tpcalc import (
    count_points,
    default_db,
    evaluate,
    expand_target,
    get_model,
    multi_type,
    render_class,
    render_expr,
)

db = default_db()

print("Fold-point expansions (kappa = -1):")
for spec in ["A1", "A1,A1", "A1,A1,A1"]:
    t = multi_type(spec, -1)
    print(f"   n_{{{spec}}} =", render_expr(expand_target(t, db)))

print("\nDiscriminant of a pencil of degree-d plane curves (degree 3(d-1)^2):")
disc = expand_target(multi_type("A1", -1), db)
for d in range(2, 7):
    print(f"   d={d}:", render_class(evaluate(disc, get_model(f'pencil:{d}'))))

print("\nSalmon: triple points of the dual surface")
triple = multi_type("A1,A1,A1", -1)
for d in range(3, 7):
    print(f"   d={d}:", count_points(get_model(f"dual-surface:{d}"), triple, db))

print("\nRoberts: three-nodal curves in a web")
for d in range(4, 9):
    print(f"   d={d}:", count_points(get_model(f"web3:{d}"), triple, db))
