"""Map models: pullback, pushforward, quotient Chern classes, s_I classes.

The quotient Chern class c(f) = f*c(TY)/c(TX) and its pushed monomials
s_I(f) = f_*(c^I(f)) are the only map data the expansion engine ever needs.
"""

from tpcalc import get_model, render_class
from tpcalc.maps import LNIndex

for name in ["veronese-p3", "scroll-q-p3", "ratcurve:4", "pencil:3",
             "dual-surface:3"]:
    f = get_model(name)
    print(f"{name}:  kappa = {f.kappa}")
    print("   c(f)  =", render_class(f.quotient_chern()))
    print("   f_*(1) =", render_class(f.pushforward(f.source.ambient.one())))
    for I in [(), (1,), (0, 1)]:
        cls = f.landweber_novikov(I)
        print(f"   s_{LNIndex(I)} =", render_class(cls))
    print()

# the projection formula holds on the nose, not just numerically
f = get_model("veronese-p3")
src, tgt = f.source.ambient, f.target_ring
alpha = src.gen("h") + 2 * src.one()
beta = tgt.gen("h")
lhs = f.pushforward(alpha * f.pullback(beta))
rhs = f.pushforward(alpha) * beta
print("projection formula, Veronese:")
print("   f_*(alpha * f^*beta) =", render_class(lhs))
print("   f_*(alpha) * beta    =", render_class(rhs))
print("   equal exactly:", lhs == rhs)
