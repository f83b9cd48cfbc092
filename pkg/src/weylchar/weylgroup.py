"""Weyl group enumeration and the direct route to characters.

Everything here is independent of the reconstruction tables in
weylchar.tables: the group is generated as matrices, the character-formula
numerator is summed term by term over the group, dimensions come from the
Weyl product formula, and weight multiplicities from the Freudenthal
recursion.  The table machinery is cross-checked against these routes.

Group elements are integer matrices acting on weight-basis coordinate rows
(v maps to v @ M).  Generation refuses algebras whose group order exceeds
ENVELOPE_MAX_ORDER = |W(E6)|; anything beyond that (the order of W(E8) is
696729600) is out of scope for full enumeration here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import (
    Algebra,
    WeightVec,
    _require_dominant_integral,
    bilinear,
    orbit,
    pair_with_root,
    root_coords,
    weight_coords,
    weyl_order,
)
from .errors import EnvelopeError, IntegrityError
from .laurent import LaurentPoly

ENVELOPE_MAX_ORDER = 51840


def check_envelope(a):
    """Raise unless full Weyl-group enumeration is tractable for a."""
    order = weyl_order(a.family, a.rank)
    if order > ENVELOPE_MAX_ORDER:
        raise EnvelopeError(
            f"|W({a.name})| = {order} exceeds the supported envelope "
            f"({ENVELOPE_MAX_ORDER}); full enumeration at such scale is out of "
            "scope (for comparison, |W(E8)| = 696729600)"
        )
    return order


@dataclass(frozen=True, eq=False)
class WeylGroup:
    """All elements of the Weyl group with their determinant signs."""

    algebra: Algebra
    elements: tuple   # integer matrices, canonical (sorted) order
    signatures: tuple

    @property
    def order(self):
        return len(self.elements)


def _simple_reflection_matrix(a, i):
    r = a.rank
    row = a.cartan[i]
    return tuple(
        tuple((1 if j == k else 0) - (row[k] if j == i else 0) for k in range(r))
        for j in range(r)
    )


def generate(a):
    """Enumerate the Weyl group by closing the simple reflections.

    Deterministic: the element list is sorted canonically.  Signs are tracked
    through the closure (each generator flips the determinant) and are
    therefore exact.
    """
    expected = check_envelope(a)
    r = a.rank
    gens = [_simple_reflection_matrix(a, i) for i in range(r)]
    ident = linalg.identity(r)
    signs = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            s = signs[m]
            for g in gens:
                prod = linalg.mat_mul(m, g)
                if prod not in signs:
                    signs[prod] = -s
                    nxt.append(prod)
        frontier = nxt
        if len(signs) > expected:
            raise IntegrityError(
                f"Weyl closure for {a.name} exceeded the classical order {expected}"
            )
    if len(signs) != expected:
        raise IntegrityError(
            f"Weyl closure for {a.name} produced {len(signs)} elements, "
            f"expected {expected}"
        )
    elements = tuple(sorted(signs))
    return WeylGroup(
        algebra=a,
        elements=elements,
        signatures=tuple(signs[m] for m in elements),
    )


def alternant_direct(a, weight, group=None):
    """Signed sum of e^(w(rho + weight)) over the whole Weyl group.

    This is the character-formula numerator computed the expensive way, used
    as the independent reference for the table route.  When group is omitted
    it is generated on the spot, so a bare call prices in the full cost of
    touching the Weyl group.
    """
    m = _require_dominant_integral(a, weight)
    if group is None:
        group = generate(a)
    elif group.algebra is not a:
        raise IntegrityError("group was generated for a different algebra")
    vec = tuple(x + 1 for x in m)  # rho + weight, strictly dominant
    terms = {}
    for mat, sign in zip(group.elements, group.signatures):
        e = linalg.vec_mat(vec, mat)
        if e in terms:
            raise IntegrityError("strictly dominant vector has a repeated image")
        terms[e] = sign
    return LaurentPoly._raw(a.rank, terms)


def weyl_dimension(a, weight):
    """Dimension of the irreducible module, by the Weyl product formula."""
    m = _require_dominant_integral(a, weight)
    shifted = tuple(x + 1 for x in m)
    ones = (1,) * a.rank
    num = 1
    den = 1
    for alpha in a.positive_roots:
        n = alpha.coords
        num *= pair_with_root(a, shifted, n)
        den *= pair_with_root(a, ones, n)
    q, rem = divmod(num, den)
    if rem:
        raise IntegrityError("Weyl dimension product did not come out integral")
    return q


def _dominant_weights_below(a, top):
    """Dominant weights mu with top - mu in the non-negative root lattice.

    Returns a list of (weight coords, depth coords) sorted by increasing
    depth height, which is the order the Freudenthal recursion needs.
    """
    r = a.rank
    lam = WeightVec.weight(top)
    # c_i <= (top, l_i) / d_i bounds the root-lattice depth coordinatewise
    bounds = []
    for i in range(r):
        cap = bilinear(a, lam, a.fundamental_weights[i]) / Fraction(a.root_norms[i], 2)
        bounds.append(int(cap))
    out = []
    for depth in itertools.product(*(range(b + 1) for b in bounds)):
        mu = tuple(
            top[k] - sum(depth[i] * a.cartan[i][k] for i in range(r))
            for k in range(r)
        )
        if all(x >= 0 for x in mu):
            out.append((mu, depth))
    out.sort(key=lambda t: (sum(t[1]), t[1]))
    return out


def freudenthal_multiplicities(a, weight):
    """Weight multiplicities of the irreducible module, by recursion.

    Returns the full finitely-supported map from weight-basis coordinate rows
    to multiplicities: dominant weights come from the recursion, the rest by
    Weyl-orbit invariance.
    """
    m = _require_dominant_integral(a, weight)
    lam_plus_rho = WeightVec.weight(tuple(x + 1 for x in m))
    top_norm = bilinear(a, lam_plus_rho, lam_plus_rho)
    pos = [root_coords(a, alpha) for alpha in a.positive_roots]
    pos_w = [weight_coords(a, alpha) for alpha in a.positive_roots]
    r = a.rank
    cartan = a.cartan

    def reduce(v):
        v = list(v)
        while True:
            for i in range(r):
                if v[i] < 0:
                    ci = v[i]
                    row = cartan[i]
                    for k in range(r):
                        v[k] -= ci * row[k]
                    break
            else:
                return tuple(v)

    dominant = {}
    for mu, depth in _dominant_weights_below(a, m):
        if not any(depth):
            dominant[mu] = 1
            continue
        acc = 0
        for n, nw in zip(pos, pos_w):
            k = 1
            while True:
                nu = tuple(mu[j] + k * nw[j] for j in range(r))
                mult = dominant.get(reduce(nu))
                if mult is None:
                    break  # weights along a root string are contiguous
                acc += mult * pair_with_root(a, nu, n)
                k += 1
        mu_plus_rho = WeightVec.weight(tuple(x + 1 for x in mu))
        denom = top_norm - bilinear(a, mu_plus_rho, mu_plus_rho)
        if denom <= 0:
            raise IntegrityError("Freudenthal denominator must be positive")
        value = Fraction(2 * acc, 1) / denom
        if value.denominator != 1 or value < 0:
            raise IntegrityError(
                f"Freudenthal recursion gave non-integral multiplicity at {mu}"
            )
        dominant[mu] = int(value)

    full = {}
    for mu, mult in dominant.items():
        if mult == 0:
            continue
        for w in orbit(a, WeightVec.weight(mu)):
            full[w.coords] = mult
    return full
