"""Sparse exact Laurent polynomials in r commuting variables over the integers.

A polynomial is a finitely supported map from integer exponent rows of fixed
length (the rank) to nonzero integer coefficients.  Arithmetic is exact with
arbitrary-precision coefficients; no floating point anywhere.

Exact division shifts both operands into the ordinary polynomial ring by a
monomial translation (per-coordinate support minimum), reduces leading terms
under a monomial order, demands a zero remainder, and translates back.  Over
an integral domain the per-coordinate support minimum of a product is the sum
of the factors' minima, so the shifted quotient never needs negative
exponents and the translation is safe.
"""

from __future__ import annotations

import heapq

from .errors import InputError, NotDivisibleError


def _grlex_key(e):
    return (sum(e), e)


def _lex_key(e):
    return e


_ORDERS = {"grlex": _grlex_key, "lex": _lex_key}


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial.

    terms maps exponent tuples to nonzero int coefficients.  Do not mutate
    the dict after construction; every operation returns a fresh object.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        rank = int(rank)
        if rank < 1:
            raise InputError("rank must be >= 1")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != rank:
                raise InputError(
                    f"exponent row {exps} has length {len(exps)}, expected {rank}"
                )
            if not all(isinstance(x, int) for x in exps):
                raise InputError(f"exponents must be integers, got {exps}")
            if not isinstance(coeff, int):
                raise InputError(f"coefficients must be integers, got {coeff!r}")
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self.rank = rank
        self.terms = clean

    @classmethod
    def _raw(cls, rank, terms):
        """Internal fast path: terms must already be clean."""
        p = object.__new__(cls)
        p.rank = rank
        p.terms = terms
        return p

    @classmethod
    def zero(cls, rank):
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank):
        return cls._raw(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, rank, exps, coeff=1):
        return cls(rank, {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            raise InputError(f"expected LaurentPoly, got {type(other).__name__}")
        if self.rank != other.rank:
            raise InputError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.rank, out)

    def __neg__(self):
        return LaurentPoly._raw(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.rank, out)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.rank)
            return LaurentPoly._raw(
                self.rank, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        r = range(self.rank)
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(e1[k] + e2[k] for k in r)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly._raw(self.rank, out)

    __rmul__ = __mul__

    def translate(self, delta):
        """Multiply by the monomial with exponent row delta."""
        delta = tuple(delta)
        if len(delta) != self.rank:
            raise InputError("translation row has wrong length")
        r = range(self.rank)
        return LaurentPoly._raw(
            self.rank,
            {tuple(e[k] + delta[k] for k in r): c for e, c in self.terms.items()},
        )

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def eval_ones(self):
        """Value with every variable set to 1: the coefficient sum."""
        return sum(self.terms.values())

    def leading(self, order="grlex"):
        """(exponent, coefficient) of the maximal term under the order."""
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        key = _ORDERS[order]
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def sorted_terms(self, reverse=True):
        """Terms sorted by graded-lex, descending by default."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=reverse)

    def __repr__(self):
        n = len(self.terms)
        return f"LaurentPoly(rank={self.rank}, terms={n})"


def _support_min(p):
    its = iter(p.terms)
    first = next(its)
    lo = list(first)
    for e in its:
        for k, x in enumerate(e):
            if x < lo[k]:
                lo[k] = x
    return tuple(lo)


def exact_div(num, den, order="grlex"):
    """Exact quotient num / den in the Laurent ring over the integers.

    The quotient is order-independent when it exists; a nonzero remainder or
    a non-integral coefficient raises NotDivisibleError, which signals an
    upstream bug in this package's own use.
    """
    if not isinstance(num, LaurentPoly) or not isinstance(den, LaurentPoly):
        raise InputError("exact_div expects LaurentPoly operands")
    num._check(den)
    if order not in _ORDERS:
        raise InputError(f"unknown monomial order {order!r}")
    if den.is_zero():
        raise InputError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.rank)

    keyf = _ORDERS[order]
    rank = num.rank
    r = range(rank)

    shift_num = _support_min(num)
    shift_den = _support_min(den)
    rem = {
        tuple(e[k] - shift_num[k] for k in r): c for e, c in num.terms.items()
    }
    den_terms = sorted(
        (
            (tuple(e[k] - shift_den[k] for k in r), c)
            for e, c in den.terms.items()
        ),
        key=lambda t: keyf(t[0]),
        reverse=True,
    )
    lt_exp, lt_coeff = den_terms[0]
    tail = den_terms[1:]

    # max-heap by pushing negated order keys; lazy deletion of stale keys
    if order == "grlex":
        def hkey(e):
            return (-sum(e), tuple(-x for x in e))
    else:
        def hkey(e):
            return tuple(-x for x in e)

    heap = [(hkey(e), e) for e in rem]
    heapq.heapify(heap)
    quotient = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = rem.get(e)
        if c is None:
            continue  # stale entry
        del rem[e]
        q_exp = tuple(e[k] - lt_exp[k] for k in r)
        if any(x < 0 for x in q_exp) or c % lt_coeff != 0:
            raise NotDivisibleError(
                f"remainder has irreducible leading term at exponent {e}"
            )
        q_c = c // lt_coeff
        quotient[q_exp] = q_c
        for f, d in tail:
            key = tuple(q_exp[k] + f[k] for k in r)
            s = rem.get(key, 0) - q_c * d
            if s:
                if key not in rem:
                    heapq.heappush(heap, (hkey(key), key))
                rem[key] = s
            else:
                rem.pop(key, None)
    if rem:
        raise NotDivisibleError("division left a nonzero remainder")

    delta = tuple(shift_num[k] - shift_den[k] for k in r)
    return LaurentPoly._raw(
        rank, {tuple(e[k] + delta[k] for k in r): c for e, c in quotient.items()}
    )
