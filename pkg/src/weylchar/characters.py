"""Characters of irreducible highest-weight modules.

A character is the exact Laurent-polynomial quotient of two alternants:
the numerator built at the highest weight and the denominator built at
weight zero.  Exponent rows of the quotient are weight-basis coordinates of
genuine weights of the module, so the coefficient map *is* the multiplicity
map with no re-centering left to the caller.

Two construction routes exist and must agree: "gamma" reconstructs both
alternants from the per-algebra table, "weyl" sums over the enumerated
group.  The quotient itself is route-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg, tables, weylgroup
from .algebra import Algebra, WeightVec, _require_dominant_integral
from .errors import InputError, IntegrityError
from .laurent import LaurentPoly, exact_div

METHODS = ("gamma", "weyl")


@dataclass(frozen=True, eq=False)
class CharacterResult:
    algebra: Algebra
    highest_weight: WeightVec
    poly: LaurentPoly     # exponent rows are weight-basis coords of weights
    dimension: int
    method: str

    def __repr__(self):
        coords = list(self.highest_weight.coords)
        return (
            f"CharacterResult({self.algebra.name}, {coords}, "
            f"dim={self.dimension})"
        )


def _alternant_pair(a, m, method, table=None, group=None):
    if method == "gamma":
        t = table if table is not None else tables.shared_table(a)
        num = tables.alternant(t, WeightVec.weight(m))
        den = tables.alternant(t, WeightVec.weight((0,) * a.rank))
    elif method == "weyl":
        g = group if group is not None else weylgroup.generate(a)
        num = weylgroup.alternant_direct(a, WeightVec.weight(m), group=g)
        den = weylgroup.alternant_direct(a, WeightVec.weight((0,) * a.rank), group=g)
    else:
        raise InputError(f"unknown method {method!r}; expected one of {METHODS}")
    return num, den


def character(a, weight, method="gamma", table=None):
    """Character of the irreducible module with the given highest weight.

    weight may be a WeightVec or a row of weight-basis coordinates.  The
    result is cached per (algebra, weight, method) when no explicit table is
    passed.
    """
    if not isinstance(weight, WeightVec):
        weight = WeightVec.weight(tuple(weight))
    m = _require_dominant_integral(a, weight, what="highest weight")
    if table is None:
        return _character_cached(a, m, method)
    return _character_impl(a, m, method, table)


@lru_cache(maxsize=None)
def _character_cached(a, m, method):
    return _character_impl(a, m, method, None)


def _character_impl(a, m, method, table):
    num, den = _alternant_pair(a, m, method, table=table)
    poly = exact_div(num, den)
    top = poly.coeff(m)
    if top != 1:
        raise IntegrityError(
            f"character of {a.name} at {m} has coefficient {top} at its "
            "highest weight; expected exactly 1"
        )
    if any(c <= 0 for c in poly.terms.values()):
        raise IntegrityError("character has a non-positive multiplicity")
    return CharacterResult(
        algebra=a,
        highest_weight=WeightVec.weight(m),
        poly=poly,
        dimension=poly.eval_ones(),
        method=method,
    )


def multiplicities(result):
    """Weight-to-multiplicity map of a character.

    Keys are weight-basis coordinate rows; this is exactly the coefficient
    map of the character polynomial.
    """
    return dict(result.poly.terms)


def _root_exponent_terms(a, poly):
    """Terms of poly re-expressed with root-basis exponent rows.

    Exponents become exact Fractions whenever the weight and root lattices
    differ.  Sorted descending by total degree then lexicographically.
    """
    out = []
    for e, c in poly.terms.items():
        n = linalg.vec_mat(e, a.cartan_inv)
        out.append((tuple(Fraction(x) for x in n), c))
    out.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
    return out


def alpha_variables(rank):
    """Variable names for root-basis rendering; the rank-2 case reads x, y."""
    if rank == 1:
        return ("u",)
    if rank == 2:
        return ("x", "y")
    return tuple(f"u{i + 1}" for i in range(rank))


def _fmt_exponent(x):
    if x.denominator == 1:
        return str(x.numerator)
    return f"({x.numerator}/{x.denominator})"


def render_root_basis(a, poly):
    """Human-readable root-basis rendering of a Laurent polynomial.

    One formal exponential per variable: for rank 2 the monomial e^(p a_1 +
    q a_2) prints as x^p y^q.
    """
    if poly.is_zero():
        return "0"
    names = alpha_variables(a.rank)
    chunks = []
    for exps, coeff in _root_exponent_terms(a, poly):
        factors = []
        for name, x in zip(names, exps):
            if x == 0:
                continue
            if x == 1:
                factors.append(name)
            else:
                factors.append(f"{name}^{_fmt_exponent(Fraction(x))}")
        mag = abs(coeff)
        body = " ".join(factors) if factors else "1"
        if mag != 1 or not factors:
            body = f"{mag} {body}" if factors else str(mag)
        chunks.append(("+" if coeff > 0 else "-", body))
    sign, first = chunks[0]
    text = f"-{first}" if sign == "-" else first
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


def present_alpha_basis(result):
    """Root-basis string form of a character (x, y at rank 2, else u_i)."""
    return render_root_basis(result.algebra, result.poly)


def alpha_basis_terms(result):
    """Structured root-basis terms of a character, for exact comparisons."""
    return _root_exponent_terms(result.algebra, result.poly)
