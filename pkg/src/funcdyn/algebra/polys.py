"""The polynomial ring F_q[t]: exact arithmetic, gcd, and factorization.

Two layers: module-level functions operate on raw coefficient tuples
(element indices, lowest degree first, no trailing zeros, () = 0) for the
hot loops, and the FqPoly class wraps a (spec, coeffs) pair for everything
user-facing.  Factorization is squarefree split + distinct-degree +
equal-degree (Cantor-Zassenhaus) with an explicit seed.
"""

from __future__ import annotations

import itertools
import random

from ..errors import BothZero, FieldMismatch, ZeroElement, ZeroPolynomial
from .fields import FieldSpec, FqElem

NEG_INF = float("-inf")

Raw = tuple[int, ...]


def rnorm(a: list[int]) -> Raw:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def radd(a: Raw, b: Raw, K: FieldSpec) -> Raw:
    if len(a) < len(b):
        a, b = b, a
    add = K.add
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add[out[i]][c]
    return rnorm(out)


def rneg(a: Raw, K: FieldSpec) -> Raw:
    neg = K.neg
    return tuple(neg[c] for c in a)


def rsub(a: Raw, b: Raw, K: FieldSpec) -> Raw:
    return radd(a, rneg(b, K), K)


def rscale(a: Raw, c: int, K: FieldSpec) -> Raw:
    if c == 0:
        return ()
    if c == 1:
        return a
    row = K.mul[c]
    return tuple(row[x] for x in a)


def rmul(a: Raw, b: Raw, K: FieldSpec) -> Raw:
    if not a or not b:
        return ()
    mul, add = K.mul, K.add
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            row = mul[ai]
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add[out[i + j]][row[bj]]
    return rnorm(out)


def rshift(a: Raw, n: int) -> Raw:
    """Multiply by t^n."""
    if not a:
        return ()
    return (0,) * n + a


def rmonic(a: Raw, K: FieldSpec) -> Raw:
    if not a or a[-1] == 1:
        return a
    return rscale(a, K.inv[a[-1]], K)


def rdivmod(a: Raw, b: Raw, K: FieldSpec) -> tuple[Raw, Raw]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    mul, sub_ = K.mul, K.sub
    binv = K.inv[b[-1]]
    rem = list(a)
    db = len(b) - 1
    quo = [0] * (len(a) - db)
    for top in range(len(a) - 1, db - 1, -1):
        c = rem[top]
        if c:
            c = mul[c][binv]
            shift = top - db
            quo[shift] = c
            row = mul[c]
            for i in range(db + 1):
                if b[i]:
                    rem[shift + i] = sub_(rem[shift + i], row[b[i]])
    return rnorm(quo), rnorm(rem)


def rdiv_exact(a: Raw, b: Raw, K: FieldSpec) -> Raw:
    q, r = rdivmod(a, b, K)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def rgcd(a: Raw, b: Raw, K: FieldSpec) -> Raw:
    while b:
        a, b = b, rdivmod(a, b, K)[1]
    return rmonic(a, K)


def rxgcd(a: Raw, b: Raw, K: FieldSpec) -> tuple[Raw, Raw, Raw]:
    """(g, s, u) with s*a + u*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = rdivmod(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, rsub(s0, rmul(q, s1, K), K)
        t0, t1 = t1, rsub(t0, rmul(q, t1, K), K)
    if not r0:
        raise BothZero("xgcd(0, 0)")
    c = K.inv[r0[-1]]
    return rscale(r0, c, K), rscale(s0, c, K), rscale(t0, c, K)


def rpow(a: Raw, n: int, K: FieldSpec) -> Raw:
    result: Raw = (1,)
    while n:
        if n & 1:
            result = rmul(result, a, K)
        a = rmul(a, a, K)
        n >>= 1
    return result


def rpowmod(a: Raw, n: int, f: Raw, K: FieldSpec) -> Raw:
    result: Raw = (1,)
    a = rdivmod(a, f, K)[1]
    while n:
        if n & 1:
            result = rdivmod(rmul(result, a, K), f, K)[1]
        a = rdivmod(rmul(a, a, K), f, K)[1]
        n >>= 1
    return result


def rderiv(a: Raw, K: FieldSpec) -> Raw:
    p = K.p
    out = []
    for i in range(1, len(a)):
        m = i % p
        c = a[i]
        acc = 0
        for _ in range(m):
            acc = K.add[acc][c]
        out.append(acc)
    return rnorm(out)


def reval(a: Raw, x: int, K: FieldSpec) -> int:
    acc = 0
    mul, add = K.mul, K.add
    for c in reversed(a):
        acc = add[mul[acc][x]][c]
    return acc


def rmult_in(a: Raw, f: Raw, K: FieldSpec) -> int:
    """Multiplicity of the monic irreducible f in a (a nonzero)."""
    m = 0
    while True:
        q, r = rdivmod(a, f, K)
        if r:
            return m
        a = q
        m += 1


def rstr(a: Raw, K: FieldSpec, var: str = "t") -> str:
    if not a:
        return "0"
    terms = []
    for i in reversed(range(len(a))):
        c = a[i]
        if c == 0:
            continue
        cs = K.elem_str(c)
        if "+" in cs:
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
        else:
            head = "" if cs == "1" else f"{cs}*"
            terms.append(f"{head}{var}" if i == 1 else f"{head}{var}^{i}")
    return "+".join(terms)


class FqPoly:
    """An element of F_q[t].  Immutable; never mutate coeffs."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        self.spec = spec
        self.coeffs = rnorm(list(coeffs)) if not isinstance(coeffs, tuple) else coeffs
        if self.coeffs and self.coeffs[-1] == 0:
            self.coeffs = rnorm(list(self.coeffs))

    @classmethod
    def zero(cls, spec: FieldSpec) -> "FqPoly":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "FqPoly":
        return cls(spec, (1,))

    @classmethod
    def t(cls, spec: FieldSpec) -> "FqPoly":
        return cls(spec, (0, 1))

    @classmethod
    def const(cls, spec: FieldSpec, c: int) -> "FqPoly":
        return cls(spec, (c,) if c else ())

    @classmethod
    def from_elem(cls, e: FqElem) -> "FqPoly":
        return cls.const(e.spec, e.val)

    @property
    def degree(self):
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> FqElem:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FqElem(self.spec, self.coeffs[-1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_elem(self) -> FqElem:
        return FqElem(self.spec, self.coeffs[0] if self.coeffs else 0)

    def _check(self, other: "FqPoly") -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return FqPoly(self.spec, radd(self.coeffs, other.coeffs, self.spec))

    def __sub__(self, other):
        self._check(other)
        return FqPoly(self.spec, rsub(self.coeffs, other.coeffs, self.spec))

    def __neg__(self):
        return FqPoly(self.spec, rneg(self.coeffs, self.spec))

    def __mul__(self, other):
        self._check(other)
        return FqPoly(self.spec, rmul(self.coeffs, other.coeffs, self.spec))

    def __divmod__(self, other):
        self._check(other)
        q, r = rdivmod(self.coeffs, other.coeffs, self.spec)
        return FqPoly(self.spec, q), FqPoly(self.spec, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        return FqPoly(self.spec, rpow(self.coeffs, n, self.spec))

    def scale(self, c: FqElem) -> "FqPoly":
        return FqPoly(self.spec, rscale(self.coeffs, c.val, self.spec))

    def monic(self) -> "FqPoly":
        return FqPoly(self.spec, rmonic(self.coeffs, self.spec))

    def shift(self, n: int) -> "FqPoly":
        return FqPoly(self.spec, rshift(self.coeffs, n))

    def derivative(self) -> "FqPoly":
        return FqPoly(self.spec, rderiv(self.coeffs, self.spec))

    def __call__(self, x: FqElem) -> FqElem:
        if x.spec != self.spec:
            raise FieldMismatch("evaluation point in wrong field")
        return FqElem(self.spec, reval(self.coeffs, x.val, self.spec))

    def __eq__(self, other):
        return (isinstance(other, FqPoly)
                and self.spec == other.spec and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec._hash, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)

    def __repr__(self):
        return f"FqPoly({rstr(self.coeffs, self.spec)})"

    def __str__(self):
        return rstr(self.coeffs, self.spec)


def poly_gcd(f: FqPoly, g: FqPoly) -> FqPoly:
    """Monic gcd; error on gcd(0, 0)."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    f._check(g)
    return FqPoly(f.spec, rgcd(f.coeffs, g.coeffs, f.spec))


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

def _pth_root_raw(a: Raw, K: FieldSpec) -> Raw:
    # a = g(t^p); pull out the p-th root coefficientwise
    p = K.p
    out = []
    for i in range(0, len(a), p):
        out.append(K.pth_root(a[i]))
    return rnorm(out)


def _squarefree_parts(f: Raw, K: FieldSpec) -> list[tuple[Raw, int]]:
    """Monic squarefree decomposition of monic f; returns (factor, mult) pairs."""
    parts: dict[Raw, int] = {}

    def accumulate(g: Raw, outer: int) -> None:
        fp = rderiv(g, K)
        if not fp:
            accumulate(_pth_root_raw(g, K), outer * K.p)
            return
        c = rgcd(g, fp, K)
        w = rdiv_exact(g, c, K)
        i = 1
        while len(w) > 1:
            y = rgcd(w, c, K)
            z = rdiv_exact(w, y, K)
            if len(z) > 1:
                parts[z] = parts.get(z, 0) + outer * i
            w = y
            c = rdiv_exact(c, y, K)
            i += 1
        if len(c) > 1:
            accumulate(_pth_root_raw(c, K), outer * K.p)

    accumulate(rmonic(f, K), 1)
    # split any reducible squarefree chunks later; here chunks may still be
    # products of distinct irreducibles
    return sorted(parts.items(), key=lambda kv: (len(kv[0]), kv[0]))


def _distinct_degree(f: Raw, K: FieldSpec) -> list[tuple[Raw, int]]:
    """f monic squarefree; returns (product of irreducibles of degree d, d)."""
    out = []
    h: Raw = (0, 1)
    d = 0
    while len(f) - 1 > 2 * (d + 1) - 1:
        d += 1
        h = rpowmod(h, K.q, f, K)
        g = rgcd(rsub(h, (0, 1), K), f, K)
        if len(g) > 1:
            out.append((g, d))
            f = rdiv_exact(f, g, K)
            h = rdivmod(h, f, K)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree_split(f: Raw, d: int, K: FieldSpec, rng: random.Random) -> list[Raw]:
    """f monic, product of distinct irreducibles of degree d; full split."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = rnorm([rng.randrange(K.q) for _ in range(n)])
        if len(r) <= 1:
            continue
        g = rgcd(r, f, K)
        if len(g) > 1:
            split = g
        else:
            if K.p == 2:
                # trace map sum r^(2^i), i < k*d
                acc: Raw = ()
                x = rdivmod(r, f, K)[1]
                for _ in range(K.k * d):
                    acc = radd(acc, x, K)
                    x = rdivmod(rmul(x, x, K), f, K)[1]
                h = acc
            else:
                h = rsub(rpowmod(r, (K.q ** d - 1) // 2, f, K), (1,), K)
            split = rgcd(h, f, K)
            if len(split) <= 1 or len(split) == len(f):
                continue
        return (_equal_degree_split(split, d, K, rng)
                + _equal_degree_split(rdiv_exact(f, split, K), d, K, rng))


def factorize(f: FqPoly, seed: int = 0) -> list[tuple[FqPoly, int]]:
    """Factor nonzero f into monic irreducibles with multiplicities.

    The product of the factors times the leading coefficient reproduces f.
    The seed drives the equal-degree splitting; results are sorted, so equal
    seeds give identical output and different seeds give equal factor sets.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor 0")
    K = f.spec
    rng = random.Random(seed)
    found: list[tuple[Raw, int]] = []
    for part, mult in _squarefree_parts(f.coeffs, K):
        for prod, d in _distinct_degree(part, K):
            for irr in _equal_degree_split(prod, d, K, rng):
                found.append((irr, mult))
    found.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return [(FqPoly(K, raw), m) for raw, m in found]


def is_irreducible(f: FqPoly) -> bool:
    """Rabin irreducibility test over F_q."""
    K = f.spec
    a = f.coeffs
    n = len(a) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x: Raw = (0, 1)
    xq = rpowmod(x, K.q ** n, a, K)
    if rsub(xq, x, K):
        return False
    r = 2
    nn = n
    while nn > 1:
        if nn % r == 0:
            xr = rpowmod(x, K.q ** (n // r), a, K)
            if len(rgcd(rsub(xr, x, K), a, K)) > 1:
                return False
            while nn % r == 0:
                nn //= r
        r += 1
    return True


_IRR_CACHE: dict[tuple[FieldSpec, int], list[FqPoly]] = {}


def monic_irreducibles(spec: FieldSpec, max_degree: int) -> list[FqPoly]:
    """All monic irreducibles of degree <= max_degree, sorted by (degree, coeffs)."""
    key = (spec, max_degree)
    if key in _IRR_CACHE:
        return _IRR_CACHE[key]
    out: list[FqPoly] = []
    for d in range(1, max_degree + 1):
        for tail in itertools.product(range(spec.q), repeat=d):
            f = FqPoly(spec, tail + (1,))
            ok = True
            for g in out:
                dg = g.degree
                if 2 * dg > d:
                    break
                if not (f % g):
                    ok = False
                    break
            if ok and (d == 1 or is_irreducible(f)):
                out.append(f)
    out.sort(key=FqPoly.sort_key)
    _IRR_CACHE[key] = out
    return out


def trial_factorize(f: FqPoly, irreducibles: list[FqPoly]) -> list[tuple[FqPoly, int]] | None:
    """Factor f by trial division against a sorted irreducible list.

    Returns None if f does not split completely over the given list, which
    callers treat as a signal to fall back to the general routine.
    """
    K = f.spec
    a = rmonic(f.coeffs, K)
    out = []
    for g in irreducibles:
        if len(a) == 1:
            break
        if len(g.coeffs) > len(a):
            break
        m = 0
        while True:
            q, r = rdivmod(a, g.coeffs, K)
            if r:
                break
            a = q
            m += 1
        if m:
            out.append((g, m))
    if len(a) > 1:
        return None
    return out
