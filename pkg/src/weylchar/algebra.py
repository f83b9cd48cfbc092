"""Exact root-system data for the finite-dimensional simple Lie algebras.

Conventions used throughout the package:

* ``cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)`` where a_1..a_r are the simple
  roots.  Rows index the first argument.
* The invariant form is normalised so that short roots have squared length 2.
  Long roots then have squared length 4 (families B, C, F) or 6 (G2).  For G2
  the first simple root is the long one, so root_norms == (6, 2).
* Vectors are rows of coordinates in one of two bases: the simple roots
  ("root" basis) or the fundamental weights ("weight" basis).  Because
  a_i = sum_j cartan[i][j] l_j, rows convert by  m = n @ C  and  n = m @ C^-1.
* Integral weights have integer weight-basis coordinates; their root-basis
  coordinates may be proper fractions (for A1 the Weyl vector is a_1/2).

Supported types: A_r (r >= 1), B_r (r >= 2), C_r (r >= 2), D_r (r >= 4),
G2, F4, and E6/E7/E8.  The E7 and E8 root data build fine, but operations
that enumerate the Weyl group refuse them (see the envelope checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .errors import InputError, IntegrityError

ROOT = "root"
WEIGHT = "weight"


def _normalize(x):
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


@dataclass(frozen=True)
class WeightVec:
    """A vector in the weight space, tagged with the basis of its coords."""

    coords: tuple
    basis: str

    def __post_init__(self):
        if self.basis not in (ROOT, WEIGHT):
            raise InputError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coords", tuple(_normalize(c) for c in self.coords))

    @classmethod
    def root(cls, coords):
        return cls(tuple(coords), ROOT)

    @classmethod
    def weight(cls, coords):
        return cls(tuple(coords), WEIGHT)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True, eq=False)
class Algebra:
    """Immutable root-system data for one simple algebra.

    Instances are interned by build_algebra, so identity comparison is fine.
    gram_root and gram_weight hold the invariant form on root-basis and
    weight-basis rows respectively; gram_weight_scaled is gram_weight times
    gram_scale with integer entries, for hot integer-only inner products.
    """

    family: str
    rank: int
    cartan: tuple
    root_norms: tuple
    positive_roots: tuple          # WeightVec, root basis, by height then lex
    fundamental_weights: tuple     # WeightVec, weight basis
    weyl_vector: WeightVec
    cartan_inv: tuple              # Fraction entries
    gram_root: tuple               # integer entries
    gram_weight: tuple             # Fraction entries
    gram_weight_scaled: tuple      # integer entries
    gram_scale: int

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    def __repr__(self):
        return f"Algebra({self.name})"


_RANK_BOUNDS = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)}


def weyl_order(family, rank):
    """Order of the Weyl group, by the classical product formulas."""
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {
        ("G", 2): 12,
        ("F", 4): 1152,
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
    }[(family, rank)]


def _cartan_and_norms(family, rank):
    """Cartan matrix and the symmetrizer d_i = (a_i, a_i)/2 for one type."""
    r = rank
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def edge(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(r - 1):
            edge(i, i + 1)
        d = [1] * r
        if family == "B" and r >= 2:
            # last simple root short, the rest long
            edge(r - 2, r - 1, cij=-2, cji=-1)
            d = [2] * (r - 1) + [1]
        if family == "C" and r >= 2:
            # last simple root long, the rest short
            edge(r - 2, r - 1, cij=-1, cji=-2)
            d = [1] * (r - 1) + [2]
    elif family == "D":
        for i in range(r - 2):
            edge(i, i + 1)
        edge(r - 3, r - 1)
        d = [1] * r
    elif family == "G":
        edge(0, 1, cij=-3, cji=-1)
        d = [3, 1]
    elif family == "F":
        edge(0, 1)
        edge(1, 2, cij=-2, cji=-1)
        edge(2, 3)
        d = [2, 2, 1, 1]
    else:  # E6, E7, E8: chain 1-3-4-5-6(-7)(-8) with node 2 hanging off node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: r - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
        d = [1] * r
    return tuple(tuple(row) for row in c), tuple(d)


def _positive_root_coords(cartan):
    """All positive roots in root-basis coordinates, built height by height.

    Uses the string property: for a root b and simple root a_j with p the
    length of the string below b, the string above has length p - <b, a_j*>.
    """
    r = len(cartan)
    roots = {tuple(1 if k == i else 0 for k in range(r)) for i in range(r)}
    level = sorted(roots)
    while level:
        nxt = []
        for n in level:
            m = linalg.vec_mat(n, cartan)  # weight coords of the root
            for j in range(r):
                p = 0
                probe = list(n)
                while True:
                    probe[j] -= 1
                    if probe[j] < 0 or tuple(probe) not in roots:
                        break
                    p += 1
                if p - m[j] >= 1:
                    up = list(n)
                    up[j] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.append(t)
        level = sorted(set(nxt))
    return sorted(roots, key=lambda n: (sum(n), n))


@lru_cache(maxsize=None)
def build_algebra(family, rank):
    """Construct (and intern) the root system of one simple algebra."""
    family = str(family).upper()
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise InputError(f"rank must be an integer, got {rank!r}") from None
    if family in _RANK_BOUNDS:
        if rank < _RANK_BOUNDS[family]:
            raise InputError(
                f"{family}{rank} is not a simple type: family {family} requires "
                f"rank >= {_RANK_BOUNDS[family]}"
            )
    elif (family, rank) not in _EXCEPTIONAL:
        raise InputError(
            f"{family}{rank} is not a supported simple type "
            "(A_r r>=1, B_r r>=2, C_r r>=2, D_r r>=4, G2, F4, E6, E7, E8)"
        )

    cartan, d = _cartan_and_norms(family, rank)
    r = rank
    for i in range(r):
        if cartan[i][i] != 2:
            raise IntegrityError("Cartan diagonal must be 2")
        for j in range(r):
            if i != j and cartan[i][j] > 0:
                raise IntegrityError("off-diagonal Cartan entries must be <= 0")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise IntegrityError("Cartan zero pattern must be symmetric")
            # (a_i,a_j) computed from either side must agree
            if cartan[i][j] * d[j] != cartan[j][i] * d[i]:
                raise IntegrityError("Cartan matrix is not symmetrizable by d")

    cartan_inv = linalg.inverse_frac(cartan)
    gram_root = tuple(
        tuple(cartan[i][j] * d[j] for j in range(r)) for i in range(r)
    )
    gram_weight = linalg.mat_mul(
        linalg.mat_mul(cartan_inv, gram_root), linalg.transpose(cartan_inv)
    )
    scale = 1
    for row in gram_weight:
        for x in row:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
    gram_weight_scaled = tuple(
        tuple(int(x * scale) for x in row) for row in gram_weight
    )

    pos = _positive_root_coords(cartan)
    # the sum of all positive roots must equal twice the Weyl vector
    total = tuple(sum(n[k] for n in pos) for k in range(r))
    two_rho = linalg.vec_mat((2,) * r, cartan_inv)
    if any(Fraction(total[k]) != two_rho[k] for k in range(r)):
        raise IntegrityError("positive root closure is inconsistent")

    return Algebra(
        family=family,
        rank=r,
        cartan=cartan,
        root_norms=tuple(2 * x for x in d),
        positive_roots=tuple(WeightVec.root(n) for n in pos),
        fundamental_weights=tuple(
            WeightVec.weight(tuple(1 if k == i else 0 for k in range(r)))
            for i in range(r)
        ),
        weyl_vector=WeightVec.weight((1,) * r),
        cartan_inv=cartan_inv,
        gram_root=gram_root,
        gram_weight=gram_weight,
        gram_weight_scaled=gram_weight_scaled,
        gram_scale=scale,
    )


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def parse_algebra(label):
    """Build an algebra from a label like 'G2' or 'd4'."""
    label = str(label).strip()
    if len(label) < 2 or not label[0].isalpha():
        raise InputError(f"cannot parse algebra label {label!r}; expected e.g. 'G2'")
    family, digits = label[0].upper(), label[1:]
    if not digits.isdigit():
        raise InputError(f"cannot parse algebra label {label!r}; expected e.g. 'B3'")
    return build_algebra(family, int(digits))


def _check_rank(a, v):
    if len(v.coords) != a.rank:
        raise InputError(
            f"vector has {len(v.coords)} coordinates but {a.name} has rank {a.rank}"
        )


def weight_coords(a, v):
    """Raw weight-basis coordinate row of v."""
    _check_rank(a, v)
    if v.basis == WEIGHT:
        return v.coords
    return tuple(_normalize(x) for x in linalg.vec_mat(v.coords, a.cartan))


def root_coords(a, v):
    """Raw root-basis coordinate row of v."""
    _check_rank(a, v)
    if v.basis == ROOT:
        return v.coords
    return tuple(
        _normalize(Fraction(x)) for x in linalg.vec_mat(v.coords, a.cartan_inv)
    )


def to_basis(a, v, basis):
    """Convert v to the requested basis.  Exact, round-trips losslessly."""
    if basis == v.basis:
        return v
    if basis == WEIGHT:
        return WeightVec.weight(weight_coords(a, v))
    if basis == ROOT:
        return WeightVec.root(root_coords(a, v))
    raise InputError(f"unknown basis {basis!r}")


def bilinear(a, v, w):
    """Invariant symmetric form (v, w), exact."""
    _check_rank(a, v)
    _check_rank(a, w)
    if v.basis == w.basis:
        gram = a.gram_root if v.basis == ROOT else a.gram_weight
        t = linalg.vec_mat(v.coords, gram)
        return _normalize(sum(Fraction(x) * y for x, y in zip(t, w.coords)))
    # mixed bases pair cleanly: (l_i, a_j) = delta_ij (a_j, a_j)/2
    if v.basis == ROOT:
        v, w = w, v
    halves = tuple(n // 2 for n in a.root_norms)
    return _normalize(
        sum(Fraction(x) * y * h for x, y, h in zip(v.coords, w.coords, halves))
    )


def reflect(a, v, i):
    """Simple reflection s_i, preserving the basis of v.  i is 0-based."""
    _check_rank(a, v)
    if not 0 <= i < a.rank:
        raise InputError(f"reflection index {i} out of range for rank {a.rank}")
    if v.basis == WEIGHT:
        m = v.coords
        row = a.cartan[i]
        return WeightVec.weight(
            tuple(m[k] - m[i] * row[k] for k in range(a.rank))
        )
    n = v.coords
    m_i = sum(n[k] * a.cartan[k][i] for k in range(a.rank))
    out = list(n)
    out[i] = _normalize(out[i] - m_i)
    return WeightVec.root(tuple(out))


def is_dominant(a, v):
    """True when every weight-basis coordinate is >= 0."""
    return all(c >= 0 for c in weight_coords(a, v))


def _require_dominant_integral(a, v, what="weight"):
    m = weight_coords(a, v)
    if any(not isinstance(c, int) for c in m):
        raise InputError(f"{what} must be integral (integer weight-basis coords), got {m}")
    if any(c < 0 for c in m):
        raise InputError(f"{what} must be dominant (non-negative coords), got {m}")
    return m


def orbit(a, v):
    """Weyl orbit of a dominant integral weight, canonically sorted.

    The input must already be dominant; callers holding an arbitrary weight
    should dominant_reduce first.
    """
    m = _require_dominant_integral(a, v, what="orbit seed")
    r = a.rank
    cartan = a.cartan
    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for cur in frontier:
            for i in range(r):
                ci = cur[i]
                if ci == 0:
                    continue  # reflection fixes this vector in direction i
                row = cartan[i]
                img = tuple(cur[k] - ci * row[k] for k in range(r))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(WeightVec.weight(t) for t in sorted(seen))


def dominant_reduce(a, v):
    """The unique dominant weight in the Weyl orbit of v, in weight basis."""
    m = list(weight_coords(a, v))
    r = a.rank
    cartan = a.cartan
    while True:
        for i in range(r):
            if m[i] < 0:
                ci = m[i]
                row = cartan[i]
                for k in range(r):
                    m[k] -= ci * row[k]
                break
        else:
            return WeightVec.weight(tuple(m))


def pair_with_root(a, m, n):
    """(mu, alpha) for mu in raw weight coords m and alpha in raw root coords n.

    Uses (l_i, a_j) = delta_ij (a_j, a_j)/2, so the value is just the sum of
    m_i n_i d_i with d_i = root_norms[i] / 2 an integer.  Stays in plain ints
    whenever both coordinate rows are integers, which is the hot case.
    """
    return sum(m[i] * n[i] * (a.root_norms[i] // 2) for i in range(a.rank))
