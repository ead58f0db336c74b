"""Polynomials over Q in abstract Chern and pushforward symbols.

Three families of commuting symbols, with no relations imposed:

* ``c<j>``   — quotient Chern classes, degree j;
* ``s_I``    — pushed-forward Chern monomials (target side), degree
  kappa + sum(j * i_j);
* ``fs_I``   — pullbacks of the ``s_I`` to the source, same degree.

Indices I are tuples of non-negative exponents, one per Chern-class slot;
trailing zeros are trimmed and the empty index prints as ``0`` (so ``s_0``
is the pushforward of 1).  Target-side expressions use ``s`` symbols only,
source-side ones use ``c`` and ``fs``; the two kinds never mix.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
Index = tuple[int, ...]
Symbol = tuple[str, object]  # ('c', j) | ('s', I) | ('fs', I)
Monomial = tuple[tuple[Symbol, int], ...]

_KIND_RANK = {"s": 0, "fs": 1, "c": 2}


def canon_index(I: Iterable[int]) -> Index:
    """Canonical Landweber-Novikov index: trailing zeros trimmed."""
    I = tuple(int(i) for i in I)
    if any(i < 0 for i in I):
        raise ValueError(f"negative entry in index {I}")
    while I and I[-1] == 0:
        I = I[:-1]
    return I


def index_c_degree(I: Index) -> int:
    """Degree of the Chern monomial c^I, i.e. sum of j*i_j."""
    return sum((j + 1) * i for j, i in enumerate(I))


def index_str(I: Index) -> str:
    if not I:
        return "0"
    if any(i > 9 for i in I):
        raise ValueError(f"index {I} not renderable in the one-digit-per-slot grammar")
    return "".join(str(i) for i in I)


def _symbol_key(sym: Symbol):
    kind, payload = sym
    return (_KIND_RANK[kind], payload if kind != "c" else (payload,))


def _symbol_str(sym: Symbol) -> str:
    kind, payload = sym
    if kind == "c":
        return f"c{payload}"
    return f"{kind}_{index_str(payload)}"


def symbol_degree(sym: Symbol, kappa: int) -> int:
    kind, payload = sym
    if kind == "c":
        return payload
    return kappa + index_c_degree(payload)


class SymbolicExpr:
    """Immutable polynomial with Fraction coefficients in the free symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar]):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            mono = _canon_monomial(mono)
            clean[mono] = clean.get(mono, Fraction(0)) + coeff
            if clean[mono] == 0:
                del clean[mono]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "SymbolicExpr":
        return SymbolicExpr({})

    @staticmethod
    def constant(value: Scalar) -> "SymbolicExpr":
        return SymbolicExpr({(): Fraction(value)})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Union["SymbolicExpr", Scalar]) -> "SymbolicExpr":
        other = _coerce(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return SymbolicExpr(terms)

    __radd__ = __add__

    def __neg__(self) -> "SymbolicExpr":
        return SymbolicExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union["SymbolicExpr", Scalar]) -> "SymbolicExpr":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "SymbolicExpr":
        return _coerce(other) - self

    def __mul__(self, other: Union["SymbolicExpr", Scalar]) -> "SymbolicExpr":
        if isinstance(other, (int, Fraction)):
            return SymbolicExpr({m: c * other for m, c in self.terms.items()})
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                acc[mono] = acc.get(mono, Fraction(0)) + c1 * c2
        return SymbolicExpr(acc)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "SymbolicExpr":
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, n: int) -> "SymbolicExpr":
        if n < 0:
            raise ValueError("negative powers of symbolic expressions")
        result = SymbolicExpr.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymbolicExpr.constant(other)
        return isinstance(other, SymbolicExpr) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def side(self) -> str:
        """'target' (s symbols), 'source' (c / fs symbols), or 'scalar'."""
        has_s = has_src = False
        for mono in self.terms:
            for (kind, _), _e in mono:
                if kind == "s":
                    has_s = True
                else:
                    has_src = True
        if has_s and has_src:
            raise ValueError("expression mixes target (s) and source (c, fs) symbols")
        if has_s:
            return "target"
        if has_src:
            return "source"
        return "scalar"

    def monomial_degree(self, mono: Monomial, kappa: int) -> int:
        return sum(symbol_degree(sym, kappa) * e for sym, e in mono)

    def is_homogeneous(self, degree: int, kappa: int) -> bool:
        return all(self.monomial_degree(m, kappa) == degree for m in self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(_canon_monomial(mono), Fraction(0))

    def map_monomials(self, fn) -> "SymbolicExpr":
        """Linear extension of a map monomial -> SymbolicExpr."""
        acc = SymbolicExpr.zero()
        for mono, coeff in self.terms.items():
            acc = acc + fn(mono) * coeff
        return acc

    def __repr__(self) -> str:
        return f"<{render_expr(self)}>"

    def __str__(self) -> str:
        return render_expr(self)


def _coerce(value: Union[SymbolicExpr, Scalar]) -> SymbolicExpr:
    if isinstance(value, SymbolicExpr):
        return value
    return SymbolicExpr.constant(value)


def _canon_monomial(mono) -> Monomial:
    acc: dict[Symbol, int] = {}
    for sym, e in mono:
        if e < 0:
            raise ValueError("negative exponent")
        if e == 0:
            continue
        kind, payload = sym
        if kind not in _KIND_RANK:
            raise ValueError(f"unknown symbol kind {kind!r}")
        if kind in ("s", "fs"):
            sym = (kind, canon_index(payload))
        else:
            j = int(payload)
            if j < 1:
                raise ValueError("c-symbols need index >= 1 (c0 is the constant 1)")
            sym = (kind, j)
        acc[sym] = acc.get(sym, 0) + e
    return tuple(sorted(acc.items(), key=lambda kv: _symbol_key(kv[0])))


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    acc: dict[Symbol, int] = dict(m1)
    for sym, e in m2:
        acc[sym] = acc.get(sym, 0) + e
    return tuple(sorted(acc.items(), key=lambda kv: _symbol_key(kv[0])))


# -- symbol constructors ---------------------------------------------------


def c(j: int, exp: int = 1) -> SymbolicExpr:
    """The quotient Chern class symbol c_j; c_0 = 1 and c_{<0} = 0."""
    if j < 0:
        return SymbolicExpr.zero()
    if j == 0:
        return SymbolicExpr.constant(1)
    return SymbolicExpr({((("c", j), exp),): Fraction(1)})


def s(*I: int) -> SymbolicExpr:
    """The target-side symbol s_I (pushforward of the Chern monomial c^I)."""
    return SymbolicExpr({((("s", canon_index(I)), 1),): Fraction(1)})


def fs(*I: int) -> SymbolicExpr:
    """The source-side symbol fs_I = pullback of s_I."""
    return SymbolicExpr({((("fs", canon_index(I)), 1),): Fraction(1)})


def c_monomial(I: Index) -> SymbolicExpr:
    """c^I = c_1^{i_1} c_2^{i_2} ... as a SymbolicExpr."""
    expr = SymbolicExpr.constant(1)
    for j, e in enumerate(I, start=1):
        if e:
            expr = expr * SymbolicExpr({((("c", j), e),): Fraction(1)})
    return expr


def c_exponents(mono: Monomial) -> Index:
    """Exponent vector of the c-part of a monomial, canonically trimmed."""
    top = 0
    for (kind, payload), _e in mono:
        if kind == "c":
            top = max(top, payload)
    vec = [0] * top
    for (kind, payload), e in mono:
        if kind == "c":
            vec[payload - 1] = e
    return canon_index(vec)


def split_monomial(mono: Monomial):
    """(c exponent vector, ((index, exp) for fs), ((index, exp) for s))."""
    fs_part = tuple((payload, e) for (kind, payload), e in mono if kind == "fs")
    s_part = tuple((payload, e) for (kind, payload), e in mono if kind == "s")
    return c_exponents(mono), fs_part, s_part


def sify(expr: SymbolicExpr) -> SymbolicExpr:
    """Formal pushforward of a source-side expression.

    Each monomial c^K * prod fs_I^e maps to s_K * prod s_I^e: the c-part is
    pushed to its Landweber-Novikov symbol (the empty c-part becomes s_0, the
    pushforward of 1) and every pullback factor loses its pullback by the
    projection formula.
    """
    if expr.side == "target":
        raise ValueError("expression is already on the target side")

    def push(mono: Monomial) -> SymbolicExpr:
        K, fs_part, s_part = split_monomial(mono)
        if s_part:
            raise ValueError("source expression contains target symbols")
        out = s(*K)
        for I, e in fs_part:
            out = out * s(*I) ** e
        return out

    return expr.map_monomials(push)


# -- rendering --------------------------------------------------------------
#
# Deterministic monomial order tuned to the conventional way these
# polynomials are written: pushforward-heavy monomials first, then by the
# total Chern weight of their indices, then short indices before long ones;
# pure Chern monomials last, higher c_1-powers first ("c1^2 + c2").


def _index_order(I: Index):
    return (len(I), tuple(-i for i in I))


def _monomial_sort_key(mono: Monomial):
    s_count = 0
    s_weight = 0
    s_seq = []
    c_deg = 0
    for (kind, payload), e in mono:
        if kind in ("s", "fs"):
            s_count += e
            s_weight += index_c_degree(payload) * e
            s_seq.extend([_index_order(payload)] * e)
        else:
            c_deg += payload * e
    c_vec = c_exponents(mono)
    return (
        -s_count,
        -s_weight,
        tuple(sorted(s_seq)),
        -c_deg,
        (len(c_vec), tuple(-e for e in c_vec)),
        mono,
    )


def _render_sym_monomial(mono: Monomial) -> str:
    parts = []
    for sym, e in mono:
        parts.append(_symbol_str(sym) if e == 1 else f"{_symbol_str(sym)}^{e}")
    return "*".join(parts)


def render_expr(expr: SymbolicExpr) -> str:
    if not expr.terms:
        return "0"
    out = []
    for mono in sorted(expr.terms, key=_monomial_sort_key):
        coeff = expr.terms[mono]
        mstr = _render_sym_monomial(mono)
        mag = abs(coeff)
        if not mstr:
            body = str(mag)
        elif mag == 1:
            body = mstr
        else:
            body = f"{mag}*{mstr}"
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(out)


_SYM_TERM_SPLIT_RE = re.compile(r"(?<![\^*/])\s*([+-])\s*")
_SYM_FACTOR_RE = re.compile(
    r"(?:(\d+(?:/\d+)?)|c(\d+)|(s|fs)_(\d+))(?:\^(\d+))?$"
)


def parse_expr(text: str) -> SymbolicExpr:
    """Parse the grammar produced by render_expr (round-trips bit-exactly)."""
    text = text.strip()
    if text == "0":
        return SymbolicExpr.zero()
    total = SymbolicExpr.zero()
    pieces = _SYM_TERM_SPLIT_RE.split(text)
    signed: list[tuple[int, str]] = []
    if pieces[0].strip():
        signed.append((1, pieces[0].strip()))
    for i in range(1, len(pieces), 2):
        sign = 1 if pieces[i] == "+" else -1
        chunk = pieces[i + 1].strip()
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        signed.append((sign, chunk))
    for sign, chunk in signed:
        term = SymbolicExpr.constant(sign)
        for factor in chunk.split("*"):
            m = _SYM_FACTOR_RE.match(factor.strip())
            if not m:
                raise ValueError(f"cannot parse factor {factor!r}")
            number, cj, skind, sdigits, power = m.groups()
            e = int(power or 1)
            if number is not None:
                term = term * (Fraction(number) ** e)
            elif cj is not None:
                term = term * c(int(cj), e)
            else:
                I = canon_index(int(d) for d in sdigits)
                sym = ("s" if skind == "s" else "fs", I)
                term = term * SymbolicExpr({((sym, e),): Fraction(1)})
        total = total + term
    return total
