"""Arithmetic in the constant field F_q, q = p^k, with a fixed irreducible modulus.

Elements are encoded as integers in [0, q): the element with coefficient
vector (c_0, ..., c_{k-1}) over F_p (c_i multiplying g^i, g the residue of
the generator) is encoded as sum c_i * p^i.  All arithmetic goes through
tables built once per FieldSpec, which keeps the desk-scale hot loops cheap.
"""

from __future__ import annotations

import functools
import itertools

from ..errors import CompositeP, FieldMismatch, ZeroElement


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# dense F_p[x] helpers used only for modulus selection (lists of ints, low
# degree first, no trailing zeros)
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = a[:]
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - df
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fi) % p
        a.pop()
    return _trim(a)


def _ppowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _irreducible_fp(f: list[int], p: int) -> bool:
    """Rabin test: f monic of degree k over F_p."""
    k = len(f) - 1
    if k <= 0:
        return False
    x = [0, 1]
    xq = _ppowmod(x, p ** k, f, p)
    if _trim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)]):
        return False
    r = 2
    kk = k
    while kk > 1:
        if kk % r == 0:
            xr = _ppowmod(x, p ** (k // r), f, p)
            d = _pgcd(f, _trim([(a - b) % p for a, b in
                                itertools.zip_longest(xr, x, fillvalue=0)]), p)
            if len(d) - 1 != 0:
                return False
            while kk % r == 0:
                kk //= r
        r += 1
    return True


class FieldSpec:
    """The field F_{p^k} realized as F_p[x] modulo a fixed monic irreducible.

    Instances are interned through make_field / make_field_with_modulus;
    tables are filled once in the constructor and never mutated, so a spec
    can be shared freely between workers.
    """

    __slots__ = ("p", "k", "q", "modulus", "add", "mul", "neg", "inv", "_hash")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise CompositeP(f"{p} is not prime")
        if k < 1:
            raise ValueError("k must be >= 1")
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _irreducible_fp(list(modulus), p):
            raise ValueError("modulus is not irreducible over F_p")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus
        self._hash = hash((p, k, modulus))
        self._build_tables()

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        digits = [self._digits(e) for e in range(q)]

        def enc(vec: list[int]) -> int:
            out = 0
            for c in reversed(vec[:k]):
                out = out * p + c
            return out

        self.add = [[enc([(a + b) % p for a, b in zip(digits[i], digits[j])])
                     for j in range(q)] for i in range(q)]
        self.neg = [enc([(-a) % p for a in digits[i]]) for i in range(q)]
        mod = list(self.modulus)
        mul = []
        for i in range(q):
            row = []
            for j in range(q):
                prod = _pmod(_pmul(_trim(digits[i][:]), _trim(digits[j][:]), p), mod, p)
                prod += [0] * (k - len(prod))
                row.append(enc(prod))
            mul.append(row)
        self.mul = mul
        inv = [0] * q
        for i in range(1, q):
            for j in range(1, q):
                if mul[i][j] == 1:
                    inv[i] = j
                    break
        self.inv = inv

    def _digits(self, e: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(e % self.p)
            e //= self.p
        return out

    def coeffs(self, e: int) -> tuple[int, ...]:
        """Coefficient vector over F_p of the element with index e."""
        return tuple(self._digits(e))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            if a == 0:
                raise ZeroElement("cannot invert 0")
            a, n = self.inv[a], -n
        result = 1
        mul = self.mul
        while n:
            if n & 1:
                result = mul[result][a]
            a = mul[a][a]
            n >>= 1
        return result

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroElement("division by zero element")
        return self.mul[a][self.inv[b]]

    def pth_root(self, a: int) -> int:
        # Frobenius is x -> x^p; its inverse is x -> x^(p^(k-1))
        return self.pow(a, self.p ** (self.k - 1))

    def elem_str(self, e: int) -> str:
        if self.k == 1:
            return str(e)
        terms = []
        for i in reversed(range(self.k)):
            c = self._digits(e)[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}g" if i == 1 else f"{head}g^{i}")
        return "+".join(terms) if terms else "0"

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FieldSpec(p={self.p}, k={self.k}, q={self.q})"

    def __reduce__(self):
        return (make_field_with_modulus, (self.p, self.k, self.modulus))


@functools.lru_cache(maxsize=None)
def make_field_with_modulus(p: int, k: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, k, modulus)


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """F_{p^k} with the lexicographically smallest monic irreducible modulus.

    Candidate moduli x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by their
    coefficient sequences (c_0, ..., c_{k-1}) compared low-to-high as
    integers, so repeated calls are reproducible across runs and machines.
    """
    if not is_prime(p):
        raise CompositeP(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    for tail in itertools.product(range(p), repeat=k):
        modulus = tuple(tail) + (1,)
        if _irreducible_fp(list(modulus), p):
            return make_field_with_modulus(p, k, modulus)
    raise AssertionError("no irreducible of requested degree found")


def field_of_order(q: int) -> FieldSpec:
    """F_q for a prime power q, with the default modulus."""
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                break
            return make_field(p, k)
    raise CompositeP(f"{q} is not a prime power")


class FqElem:
    """A single element of a FieldSpec, with operator sugar."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        if not 0 <= val < spec.q:
            raise ValueError("element index out of range")
        self.spec = spec
        self.val = val

    def _check(self, other: "FqElem") -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise FieldMismatch("elements of different fields")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.val)

    def __add__(self, other):
        self._check(other)
        return FqElem(self.spec, self.spec.add[self.val][other.val])

    def __sub__(self, other):
        self._check(other)
        return FqElem(self.spec, self.spec.sub(self.val, other.val))

    def __mul__(self, other):
        self._check(other)
        return FqElem(self.spec, self.spec.mul[self.val][other.val])

    def __truediv__(self, other):
        self._check(other)
        return FqElem(self.spec, self.spec.div(self.val, other.val))

    def __neg__(self):
        return FqElem(self.spec, self.spec.neg[self.val])

    def __pow__(self, n: int):
        return FqElem(self.spec, self.spec.pow(self.val, n))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        return (isinstance(other, FqElem)
                and self.spec == other.spec and self.val == other.val)

    def __hash__(self):
        return hash((self.spec, self.val))

    def __repr__(self):
        return f"FqElem({self.spec.elem_str(self.val)} in F_{self.spec.q})"


def mul_order(a: FqElem) -> int:
    """Least n >= 1 with a^n = 1; divides q - 1."""
    if a.val == 0:
        raise ZeroElement("0 has no multiplicative order")
    spec = a.spec
    n, x = 1, a.val
    while x != 1:
        x = spec.mul[x][a.val]
        n += 1
    return n


def enumerate_units(spec: FieldSpec) -> list[FqElem]:
    """All q - 1 nonzero elements in index order."""
    return [FqElem(spec, v) for v in range(1, spec.q)]
