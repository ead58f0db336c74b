"""Multi-singularity expansion engine.

The key objects:

* a registry of mono-singularity types (name, kappa) -> target codimension;
* a keyed store of residual polynomials R in the Chern symbols, one per
  (multiset of type names, kappa);
* the two set-partition expansions built from the store: the target class
  as a polynomial in the s_I, and the source class as a polynomial in c_j
  and fs_I;
* their inverse (recovering a residual from a known expansion), the
  determinantal polynomial for corank-1 loci, evaluation on map models,
  zero-dimensional point counts and the exponential generating identity.

Ordered tuples of types are the raw objects; geometric counts divide by the
order of the tuple's symmetry group.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Sequence

from .algebra import GradedClass, integrate_top
from .maps import MapModel
from .symbolic import (
    SymbolicExpr,
    c,
    c_monomial,
    fs,
    parse_expr,
    render_expr,
    s,
    split_monomial,
)


class SingTypeError(ValueError):
    """Unknown singularity type / bad multi-type."""


class MissingResidual(KeyError):
    """A required residual-polynomial entry is absent from the store."""

    def __init__(self, names: tuple[str, ...], kappa: int):
        self.names = names
        self.kappa = kappa
        super().__init__(f"no residual polynomial for types={list(names)} kappa={kappa}")


class InconsistentExtraction(ValueError):
    """The given expansion is not reproducible by any residual polynomial."""


# -- singularity-type registry ------------------------------------------------


@dataclass(frozen=True)
class SingType:
    """A mono-singularity type with its target codimension ell."""

    name: str
    kappa: int
    ell: int


_REGISTRY: dict[tuple[str, int], int] = {
    ("A1", 1): 3,
    ("A1", -1): 1,
}


def register_sing_type(name: str, kappa: int, ell: int) -> None:
    """Extend the registry (ell must be supplied for non-built-in types)."""
    if ell < 0:
        raise SingTypeError("ell must be non-negative")
    _REGISTRY[(name, kappa)] = ell


def sing_ell(name: str, kappa: int) -> int:
    """Target codimension of a mono-singularity type."""
    if name == "A0":
        if kappa < 0:
            raise SingTypeError("A0 is not an isolated-singularity type for kappa < 0")
        return kappa
    try:
        return _REGISTRY[(name, kappa)]
    except KeyError:
        raise SingTypeError(
            f"unknown singularity type {name!r} at kappa={kappa}; "
            "register it with register_sing_type(name, kappa, ell)"
        ) from None


def get_sing_type(name: str, kappa: int) -> SingType:
    return SingType(name, kappa, sing_ell(name, kappa))


def _aut_order(names: Sequence[str]) -> int:
    order = 1
    for name in set(names):
        order *= math.factorial(list(names).count(name))
    return order


@dataclass(frozen=True)
class MultiSingType:
    """An ordered tuple of mono-singularity type names at a fixed kappa."""

    entries: tuple[str, ...]
    kappa: int

    def __post_init__(self):
        if not self.entries:
            raise SingTypeError("multi-singularity type needs at least one entry")
        for name in self.entries:
            sing_ell(name, self.kappa)  # validates

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def ell_total(self) -> int:
        return sum(sing_ell(n, self.kappa) for n in self.entries)

    @property
    def aut_order(self) -> int:
        return _aut_order(self.entries)

    @property
    def aut_order_rest(self) -> int:
        return _aut_order(self.entries[1:])

    @property
    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.entries))

    def __str__(self) -> str:
        return ",".join(self.entries)


def multi_type(spec: str | Iterable[str], kappa: int) -> MultiSingType:
    """Build a MultiSingType from 'A0,A0,A1' or an iterable of names."""
    if isinstance(spec, str):
        names = tuple(n.strip() for n in spec.split(",") if n.strip())
    else:
        names = tuple(spec)
    return MultiSingType(names, kappa)


# -- set partitions -----------------------------------------------------------

SetPartition = tuple[tuple[int, ...], ...]


def set_partitions(r: int) -> list[SetPartition]:
    """All partitions of {1,...,r} into nonempty unordered blocks.

    Blocks are sorted tuples keyed by least element and the whole list is
    sorted, so the order is deterministic.  The count is the r-th Bell number.
    """
    if r < 1:
        raise ValueError("set_partitions needs r >= 1")
    parts: list[list[list[int]]] = [[]]
    for x in range(1, r + 1):
        grown: list[list[list[int]]] = []
        for p in parts:
            for i in range(len(p)):
                grown.append([blk + [x] if j == i else list(blk) for j, blk in enumerate(p)])
            grown.append([list(blk) for blk in p] + [[x]])
        parts = grown
    canon = [
        tuple(sorted((tuple(sorted(b)) for b in p), key=lambda blk: blk[0]))
        for p in parts
    ]
    return sorted(canon)


def bell_number(r: int) -> int:
    """Bell numbers via the Bell triangle (independent of set_partitions)."""
    if r == 0:
        return 1
    row = [1]
    for _ in range(r - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


# -- residual polynomial store -------------------------------------------------


def residual_a0_family(r: int, kappa: int) -> SymbolicExpr:
    """The kappa-parametric immersion-tuple residuals, r = 1, 2, 3."""
    if kappa < 1:
        raise SingTypeError("the A0 residual family is shipped for kappa >= 1 only")
    if r == 1:
        return SymbolicExpr.constant(1)
    if r == 2:
        return -c(kappa)
    if r == 3:
        acc = c(kappa) ** 2
        for i in range(kappa):
            acc = acc + (2 ** i) * c(kappa - i - 1) * c(kappa + i + 1)
        return 2 * acc
    raise MissingResidual(("A0",) * r, kappa)


class ResidualDB:
    """Keyed store of residual polynomials, order-independent in the entries."""

    def __init__(self):
        self._store: dict[tuple[tuple[str, ...], int], SymbolicExpr] = {}

    def copy(self) -> "ResidualDB":
        db = ResidualDB()
        db._store = dict(self._store)
        return db

    def keys(self):
        return sorted(self._store)

    def contains(self, names: Iterable[str], kappa: int) -> bool:
        return (tuple(sorted(names)), kappa) in self._store

    def insert(self, names: Iterable[str], kappa: int, R: SymbolicExpr) -> None:
        names = tuple(sorted(names))
        for mono in R.terms:
            for (kind, _), _e in mono:
                if kind != "c":
                    raise SingTypeError("residual polynomials are polynomials in the c_j only")
        t = MultiSingType(names, kappa)
        want = t.ell_total - kappa
        if not R.is_homogeneous(want, kappa):
            raise SingTypeError(
                f"residual for {names} at kappa={kappa} must be homogeneous "
                f"of degree {want}"
            )
        self._store[(names, kappa)] = R

    def remove(self, names: Iterable[str], kappa: int) -> None:
        self._store.pop((tuple(sorted(names)), kappa), None)

    def get(self, names: Iterable[str], kappa: int) -> SymbolicExpr:
        names = tuple(sorted(names))
        try:
            return self._store[(names, kappa)]
        except KeyError:
            pass
        if set(names) == {"A0"} and kappa >= 1 and len(names) <= 3:
            R = residual_a0_family(len(names), kappa)
            self._store[(names, kappa)] = R
            return R
        raise MissingResidual(names, kappa)

    # - file format: one line per entry, e.g.
    #   types=[A0,A0,A0] kappa=1 R= 2*c1^2 + 2*c2

    _LINE_RE = re.compile(
        r"^types=\[([A-Za-z0-9_, ]*)\]\s+kappa=(-?\d+)\s+R=\s*(.+)$"
    )

    def dump(self) -> str:
        lines = []
        for (names, kappa) in sorted(self._store, key=lambda k: (k[1], len(k[0]), k[0])):
            R = self._store[(names, kappa)]
            lines.append(f"types=[{','.join(names)}] kappa={kappa} R= {render_expr(R)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, base: "ResidualDB | None" = None) -> "ResidualDB":
        db = base.copy() if base is not None else cls()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            m = cls._LINE_RE.match(line)
            if not m:
                raise ValueError(f"bad residual-db line {lineno}: {raw!r}")
            names = tuple(n.strip() for n in m.group(1).split(",") if n.strip())
            kappa = int(m.group(2))
            db.insert(names, kappa, parse_expr(m.group(3)))
        return db


def default_db() -> ResidualDB:
    """The compiled-in residual store.

    kappa = 1: the immersion family A0..A0^4, the crosscap type A1 and the
    mixed pair A0A1 (the pair entry and the quadruple-immersion entry were
    obtained by inverting the corresponding published source expansions; the
    round trip is exercised in the acceptance tests).
    kappa = -1: the critical-point family A1, A1^2, A1^3 driving discriminant
    double/triple-point counts.
    """
    db = ResidualDB()
    for r in (1, 2, 3):
        db.insert(("A0",) * r, 1, residual_a0_family(r, 1))
    db.insert(("A0",) * 4, 1, parse_expr("-6*c1^3 - 18*c1*c2 - 12*c3"))
    db.insert(("A1",), 1, parse_expr("c2"))
    db.insert(("A0", "A1"), 1, parse_expr("-2*c1*c2 - 2*c3"))
    db.insert(("A1",), -1, parse_expr("c1^2 - c2"))
    db.insert(("A1", "A1"), -1, parse_expr("-7*c1^3 + 8*c1*c2 - c3"))
    db.insert(
        ("A1", "A1", "A1"), -1,
        parse_expr("138*c1^4 - 158*c1^2*c2 + 2*c2^2 + 20*c1*c3 - 2*c4"),
    )
    return db


# -- the two partition expansions ---------------------------------------------


def _push_to_s(R: SymbolicExpr) -> SymbolicExpr:
    """Formal pushforward of a pure-Chern polynomial: c^I -> s_I."""

    def push(mono):
        K, fs_part, s_part = split_monomial(mono)
        if fs_part or s_part:
            raise SingTypeError("residual polynomials must be pure Chern polynomials")
        return s(*K)

    return R.map_monomials(push)


def _pull_of_push(R: SymbolicExpr) -> SymbolicExpr:
    """Formal f^* f_* of a pure-Chern polynomial: c^I -> fs_I."""

    def pull(mono):
        K, fs_part, s_part = split_monomial(mono)
        if fs_part or s_part:
            raise SingTypeError("residual polynomials must be pure Chern polynomials")
        return fs(*K)

    return R.map_monomials(pull)


def _block_names(t: MultiSingType, block: tuple[int, ...]) -> tuple[str, ...]:
    return tuple(sorted(t.entries[i - 1] for i in block))


def expand_target(t: MultiSingType, db: ResidualDB) -> SymbolicExpr:
    """Target expansion: the sum over set partitions of products of pushed
    residuals, a homogeneous polynomial of degree ell(t) in the s_I."""
    total = SymbolicExpr.zero()
    for partition in set_partitions(t.r):
        term = SymbolicExpr.constant(1)
        for block in partition:
            term = term * _push_to_s(db.get(_block_names(t, block), t.kappa))
        total = total + term
    return total


def expand_source(t: MultiSingType, db: ResidualDB) -> SymbolicExpr:
    """Source expansion: over set partitions, the residual of the block
    containing entry 1 stays in Chern symbols while the other blocks
    contribute pulled-back pushforwards; homogeneous of degree ell(t) - kappa."""
    total = SymbolicExpr.zero()
    for partition in set_partitions(t.r):
        first = next(block for block in partition if 1 in block)
        term = db.get(_block_names(t, first), t.kappa)
        for block in partition:
            if block is first:
                continue
            term = term * _pull_of_push(db.get(_block_names(t, block), t.kappa))
        total = total + term
    return total


def _proper_part(t: MultiSingType, db: ResidualDB, side: str) -> SymbolicExpr:
    """The expansion restricted to partitions with at least two blocks."""
    total = SymbolicExpr.zero()
    for partition in set_partitions(t.r):
        if len(partition) == 1:
            continue
        if side == "target":
            term = SymbolicExpr.constant(1)
            for block in partition:
                term = term * _push_to_s(db.get(_block_names(t, block), t.kappa))
        else:
            first = next(block for block in partition if 1 in block)
            term = db.get(_block_names(t, first), t.kappa)
            for block in partition:
                if block is first:
                    continue
                term = term * _pull_of_push(db.get(_block_names(t, block), t.kappa))
        total = total + term
    return total


def extract_residual(t: MultiSingType, known: SymbolicExpr, side: str,
                     db: ResidualDB) -> SymbolicExpr:
    """Invert an expansion: find the unique R making the expansion equal
    `known`, insert it into the db and return it.

    `side` is 'target' or 'source'; `known` must be homogeneous of degree
    ell(t) (target) or ell(t) - kappa (source).
    """
    if side not in ("source", "target"):
        raise ValueError("side must be 'source' or 'target'")
    want = t.ell_total if side == "target" else t.ell_total - t.kappa
    if not known.is_homogeneous(want, t.kappa):
        raise InconsistentExtraction(
            f"known expansion is not homogeneous of degree {want}"
        )
    delta = known - _proper_part(t, db, side)
    if side == "source":
        for mono in delta.terms:
            _K, fs_part, s_part = split_monomial(mono)
            if fs_part or s_part:
                raise InconsistentExtraction(
                    "no residual reproduces the given source expansion: "
                    f"leftover non-Chern term {render_expr(SymbolicExpr({mono: 1}))!r}"
                )
        R = delta
    else:
        terms = {}
        for mono, coeff in delta.terms.items():
            K, fs_part, s_part = split_monomial(mono)
            if K or fs_part or len(s_part) != 1 or s_part[0][1] != 1:
                raise InconsistentExtraction(
                    "no residual reproduces the given target expansion: "
                    f"leftover term {render_expr(SymbolicExpr({mono: 1}))!r} "
                    "is not a single s-symbol"
                )
            I = s_part[0][0]
            for m2, c2 in (c_monomial(I) * coeff).terms.items():
                terms[m2] = terms.get(m2, Fraction(0)) + c2
        R = SymbolicExpr(terms)
    db.insert(t.key, t.kappa, R)
    return R


# -- Thom-Porteous determinant --------------------------------------------------


def thom_porteous(kappa: int, k: int) -> SymbolicExpr:
    """The k x k determinant det[c_(kappa+k+j-i)] with c_0 = 1, c_{<0} = 0."""
    if k < 1:
        raise ValueError("thom_porteous needs k >= 1")
    total = SymbolicExpr.zero()
    for perm in permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        term = SymbolicExpr.constant(sign)
        for i in range(k):
            j = perm[i]
            term = term * c(kappa + k + (j + 1) - (i + 1))
        total = total + term
    return total


# -- evaluation on map models ----------------------------------------------------


def evaluate(expr: SymbolicExpr, f: MapModel, side: str | None = None) -> GradedClass:
    """Substitute the model's classes for the symbols.

    c_j -> degree-j part of the quotient Chern class, s_I -> the LN class,
    fs_I -> its pullback.  Target-side expressions land in the target ring,
    source-side ones in the source's ambient representative ring.
    """
    actual = expr.side
    if actual == "scalar":
        actual = side or "source"
    ring = f.target_ring if actual == "target" else f.source.ambient
    total = ring.zero()
    for mono, coeff in expr.terms.items():
        val = ring.one()
        for (kind, payload), e in mono:
            if kind == "c":
                g = f.chern(payload)
            elif kind == "s":
                g = f.landweber_novikov(payload)
            else:
                g = f.pullback(f.landweber_novikov(payload))
            val = val * g ** e
        total = total + coeff * val
    return total


def count_points(f: MapModel, t: MultiSingType, db: ResidualDB) -> Fraction:
    """Number of t-singular target points: the integrated target expansion
    divided by the tuple's symmetry order.  Requires ell(t) = dim Y."""
    if t.ell_total != f.target_ring.top_degree:
        raise ValueError(
            "locus not zero-dimensional: ell(t) = "
            f"{t.ell_total} but dim Y = {f.target_ring.top_degree}"
        )
    n_class = evaluate(expand_target(t, db), f, side="target")
    return integrate_top(f.target_ring, n_class) / t.aut_order


# -- exponential generating identity ----------------------------------------------


def verify_generating_series(types: Sequence[SingType], max_r: int,
                             db: ResidualDB) -> bool:
    """Check 1 + sum n_t/|Aut| = exp(sum x_t/|Aut|) coefficientwise.

    The check is formal: the pushed residuals f_*(R_J) are kept as free
    commuting symbols x_J, the tuple-size truncation is max_r, and every
    multiset of the given mono-types up to that size must be in the db.
    """
    if max_r < 1:
        raise ValueError("max_r must be >= 1")
    kappas = {ty.kappa for ty in types}
    if len(kappas) != 1:
        raise ValueError("all mono-types must share one kappa")
    kappa = kappas.pop()
    names = sorted({ty.name for ty in types})

    multisets = []
    for size in range(1, max_r + 1):
        for mu in combinations_with_replacement(names, size):
            db.get(mu, kappa)  # raises MissingResidual if absent
            multisets.append(mu)

    def tvec(mu):
        return tuple(mu.count(n) for n in names)

    Term = tuple  # ((t-exponents), (sorted (multiset, power) pairs))

    def mul(p: dict, q: dict) -> dict:
        out: dict[Term, Fraction] = {}
        for (tv1, xm1), c1 in p.items():
            for (tv2, xm2), c2 in q.items():
                tv = tuple(a + b for a, b in zip(tv1, tv2))
                if sum(tv) > max_r:
                    continue
                merged = dict(xm1)
                for k, e in xm2:
                    merged[k] = merged.get(k, 0) + e
                key = (tv, tuple(sorted(merged.items())))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return {k: v for k, v in out.items() if v != 0}

    unit_t = (0,) * len(names)
    one = {(unit_t, ()): Fraction(1)}

    lhs = dict(one)
    for mu in multisets:
        coeff = Fraction(1, _aut_order(mu))
        for partition in set_partitions(len(mu)):
            xm: dict[tuple[str, ...], int] = {}
            for block in partition:
                key = tuple(sorted(mu[i - 1] for i in block))
                xm[key] = xm.get(key, 0) + 1
            term = (tvec(mu), tuple(sorted(xm.items())))
            lhs[term] = lhs.get(term, Fraction(0)) + coeff
    lhs = {k: v for k, v in lhs.items() if v != 0}

    S = {
        (tvec(mu), ((mu, 1),)): Fraction(1, _aut_order(mu))
        for mu in multisets
    }
    rhs = dict(one)
    power = dict(one)
    for k in range(1, max_r + 1):
        power = mul(power, S)
        for key, v in power.items():
            rhs[key] = rhs.get(key, Fraction(0)) + v / math.factorial(k)
    rhs = {k: v for k, v in rhs.items() if v != 0}

    return lhs == rhs
