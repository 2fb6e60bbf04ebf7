"""Places of F_q(t), rational functions, valuations, and residue fields.

A place is either a monic irreducible of F_q[t] or the distinguished place
at infinity attached to v(f/g) = deg(g) - deg(f).  Residue fields k(pi) are
realized as absolute fields F_{p^(k*deg pi)} through a cached embedding, so
everything downstream works over plain FieldSpec arithmetic.
"""

from __future__ import annotations

import functools

from ..errors import FieldMismatch, ZeroPolynomial
from .fields import FieldSpec, FqElem, make_field
from .polys import (FqPoly, monic_irreducibles, rdivmod, reval, rmult_in,
                    rnorm, is_irreducible)

INF = float("inf")


class Place:
    """A place of F_q(t): a monic irreducible polynomial, or infinity."""

    __slots__ = ("spec", "poly")

    def __init__(self, spec: FieldSpec, poly: FqPoly | None):
        if poly is not None:
            if poly.spec != spec:
                raise FieldMismatch("place polynomial over wrong field")
            if not poly.is_monic() or not is_irreducible(poly):
                raise ValueError("finite place needs a monic irreducible")
        self.spec = spec
        self.poly = poly

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else len(self.poly.coeffs) - 1

    @property
    def residue_cardinality(self) -> int:
        return self.spec.q ** self.degree

    def sort_key(self):
        if self.poly is None:
            return (0, ())
        return (1, self.poly.sort_key())

    def __eq__(self, other):
        return (isinstance(other, Place)
                and self.spec == other.spec and self.poly == other.poly)

    def __hash__(self):
        return hash((self.spec, None if self.poly is None else self.poly.coeffs))

    def __repr__(self):
        return "Place(inf)" if self.poly is None else f"Place({self.poly})"

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)


def place_infinity(spec: FieldSpec) -> Place:
    return Place(spec, None)


def places_up_to(spec: FieldSpec, max_degree: int,
                 include_infinity: bool = True) -> list[Place]:
    """Infinity (optionally) followed by all finite places of degree <= bound."""
    out = [place_infinity(spec)] if include_infinity else []
    out.extend(Place(spec, f) for f in monic_irreducibles(spec, max_degree))
    return out


class RatFunc:
    """An element of K = F_q(t) in reduced form with monic denominator."""

    __slots__ = ("spec", "num", "den")

    def __init__(self, num: FqPoly, den: FqPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num._check(den)
        spec = num.spec
        if num.is_zero():
            den = FqPoly.one(spec)
        else:
            from .polys import rgcd, rdiv_exact
            g = rgcd(num.coeffs, den.coeffs, spec)
            if len(g) > 1:
                num = FqPoly(spec, rdiv_exact(num.coeffs, g, spec))
                den = FqPoly(spec, rdiv_exact(den.coeffs, g, spec))
            lc = den.coeffs[-1]
            if lc != 1:
                inv = FqElem(spec, spec.inv[lc])
                num = num.scale(inv)
                den = den.scale(inv)
        self.spec = spec
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, f: FqPoly) -> "RatFunc":
        return cls(f, FqPoly.one(f.spec))

    @classmethod
    def zero(cls, spec: FieldSpec) -> "RatFunc":
        return cls(FqPoly.zero(spec), FqPoly.one(spec))

    @classmethod
    def one(cls, spec: FieldSpec) -> "RatFunc":
        return cls(FqPoly.one(spec), FqPoly.one(spec))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def __add__(self, other):
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other):
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        return (isinstance(other, RatFunc)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if "+" in n:
            n = f"({n})"
        d = str(self.den)
        if "+" in d:
            d = f"({d})"
        return f"{n}/{d}"


def valuation(r: RatFunc, place: Place):
    """The discrete valuation v_place(r); +inf for r = 0."""
    if r.is_zero():
        return INF
    if place.is_infinity:
        return len(r.den.coeffs) - len(r.num.coeffs)
    K = r.spec
    pi = place.poly.coeffs
    return rmult_in(r.num.coeffs, pi, K) - rmult_in(r.den.coeffs, pi, K)


def poly_valuation(f: FqPoly, place: Place):
    if f.is_zero():
        return INF
    if place.is_infinity:
        return 1 - len(f.coeffs)
    return rmult_in(f.coeffs, place.poly.coeffs, f.spec)


class ResidueData:
    """Reduction data for a finite place: k(pi) as an absolute field.

    emb maps element indices of the base field into the big field; tau is
    the chosen image of t (a root of the embedded place polynomial, smallest
    by index so the choice is reproducible).
    """

    __slots__ = ("place", "field", "emb", "tau")

    def __init__(self, place: Place, field: FieldSpec, emb: tuple[int, ...], tau: int):
        self.place = place
        self.field = field
        self.emb = emb
        self.tau = tau

    def reduce_raw(self, coeffs) -> int:
        """Image in k(pi) of a polynomial given by its raw coefficients."""
        base = self.place.spec
        rem = rdivmod(coeffs, self.place.poly.coeffs, base)[1]
        big = self.field
        emb = self.emb
        acc = 0
        mul, add, tau = big.mul, big.add, self.tau
        for c in reversed(rem):
            acc = add[mul[acc][tau]][emb[c]]
        return acc

    def reduce_poly(self, f: FqPoly) -> FqElem:
        return FqElem(self.field, self.reduce_raw(f.coeffs))


@functools.lru_cache(maxsize=None)
def embed_field(small: FieldSpec, big: FieldSpec) -> tuple[int, ...]:
    """Index table of the embedding F_{p^k} -> F_{p^(k*e)}.

    Sends the generator of small to the smallest root of small's modulus in
    big.  F_p scalars keep their index, so modulus coefficients transfer
    directly.
    """
    if small == big:
        return tuple(range(small.q))
    if small.p != big.p or big.k % small.k != 0:
        raise FieldMismatch("no embedding between these fields")
    mod = small.modulus  # coefficients in F_p: valid indices in big as well
    root = None
    for x in range(big.q):
        acc = 0
        for c in reversed(mod):
            acc = big.add[big.mul[acc][x]][c]
        if acc == 0:
            root = x
            break
    assert root is not None
    table = []
    for a in range(small.q):
        digits = small.coeffs(a)
        acc = 0
        for c in reversed(digits):
            acc = big.add[big.mul[acc][root]][c]
        table.append(acc)
    return tuple(table)


@functools.lru_cache(maxsize=None)
def residue_data(place: Place) -> ResidueData:
    """Residue field of a finite place, with its reduction map."""
    if place.is_infinity:
        raise ValueError("infinity handled separately")
    base = place.spec
    e = place.degree
    if e == 1:
        # k(pi) = F_q via t -> -c for pi = t + c
        tau = base.neg[place.poly.coeffs[0]]
        return ResidueData(place, base, tuple(range(base.q)), tau)
    big = make_field(base.p, base.k * e)
    emb = embed_field(base, big)
    pi_big = [emb[c] for c in place.poly.coeffs]
    tau = None
    for x in range(big.q):
        acc = 0
        for c in reversed(pi_big):
            acc = big.add[big.mul[acc][x]][c]
        if acc == 0:
            tau = x
            break
    assert tau is not None
    return ResidueData(place, big, emb, tau)


def residue_of_ratfunc(r: RatFunc, place: Place) -> FqElem:
    """Reduce a place-integral rational function into k(place)."""
    v = valuation(r, place)
    if v == INF:
        if place.is_infinity:
            return FqElem(r.spec, 0)
        return FqElem(residue_data(place).field, 0)
    if v < 0:
        raise ZeroPolynomial("rational function has a pole at this place")
    if place.is_infinity:
        if v > 0:
            return FqElem(r.spec, 0)
        # deg num = deg den, den monic
        return FqElem(r.spec, r.num.coeffs[-1])
    data = residue_data(place)
    nr = data.reduce_raw(r.num.coeffs)
    dr = data.reduce_raw(r.den.coeffs)
    return FqElem(data.field, data.field.div(nr, dr))
