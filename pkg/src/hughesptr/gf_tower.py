"""Exact arithmetic in the tower GF(p) < GF(q) < GF(Q), with q = p^e, Q = q^2.

Every context fixes canonical moduli so that repeated runs are bit-identical:

* GF(q) is GF(p)[x] modulo the least monic irreducible of degree e, where
  candidates are ordered by their coefficient vector read as base-p digits,
  constant coefficient first.
* GF(Q) is GF(q)[w] modulo w^2 - n, where n is the least non-square of GF(q)
  in canonical index order.  Because n is a non-square, w^q = -w, which makes
  the order-2 Frobenius x -> x^q a cheap sign flip on the w coordinate.

An element a + b*w (a, b in GF(q)) is identified with the integer index
index(a) + q * index(b); equivalently, the 2e base-p digits of the index are
the element's coefficient vector over GF(p).  Index 0 is zero, index 1 is one,
and the subfield GF(q) occupies exactly the indices below q.

Scalar multiplication is schoolbook on the (a, b) pair with a single
reduction by w^2 = n.  The numpy table layer (``FieldCtx.tables``) uses
discrete-log tables instead; it is an optimization only and is required to
agree with the schoolbook path element for element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "FieldParams",
    "FieldCtx",
    "FieldElement",
    "FieldTables",
    "field_ctx",
    "is_odd_prime",
]


def is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldParams:
    """Tower sizes: odd prime p, extension degree e, q = p^e, Q = q^2."""

    p: int
    e: int

    def __post_init__(self) -> None:
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.e < 1:
            raise ValueError(f"e must be a positive integer, got {self.e}")

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def Q(self) -> int:
        return self.q**2


# ---------------------------------------------------------------------------
# GF(p)[x] helpers. Polynomials are tuples of residues, constant term first.
# ---------------------------------------------------------------------------


def _poly_rem(f: list[int], g: tuple[int, ...], p: int) -> list[int]:
    """Remainder of f modulo monic g, both coefficient lists mod p."""
    f = list(f)
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return f[:dg]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _monic_polys(p: int, deg: int):
    """All monic polynomials of the given degree, in canonical index order."""
    for t in range(p**deg):
        coeffs = []
        u = t
        for _ in range(deg):
            coeffs.append(u % p)
            u //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(poly)/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_rem(list(poly), g, p)):
                return False
    return True


def _find_base_modulus(p: int, e: int) -> tuple[int, ...]:
    for cand in _monic_polys(p, e):
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# Field elements
# ---------------------------------------------------------------------------


class FieldElement:
    """An element of GF(Q), canonically indexed.

    Instances are immutable value objects; create them through a FieldCtx
    (``element_from_index`` / ``from_int``), not directly.
    """

    __slots__ = ("ctx", "index")

    def __init__(self, ctx: "FieldCtx", index: int):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        """The 2e base-p digits of the index: coefficients over GF(p)."""
        p = self.ctx.p
        u = self.index
        out = []
        for _ in range(2 * self.ctx.e):
            out.append(u % p)
            u //= p
        return tuple(out)

    def _coerce(self, other) -> int | None:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx.params != self.ctx.params:
                raise ValueError("field elements come from different contexts")
            return other.index
        if isinstance(other, int):
            return other % self.ctx.p  # n * 1 lands in the prime subfield
        return None

    def __add__(self, other):
        j = self._coerce(other)
        if j is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add_i(self.index, j))

    __radd__ = __add__

    def __sub__(self, other):
        j = self._coerce(other)
        if j is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add_i(self.index, self.ctx._neg_i(j)))

    def __rsub__(self, other):
        j = self._coerce(other)
        if j is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add_i(j, self.ctx._neg_i(self.index)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg_i(self.index))

    def __mul__(self, other):
        j = self._coerce(other)
        if j is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul_i(self.index, j))

    __rmul__ = __mul__

    def __truediv__(self, other):
        j = self._coerce(other)
        if j is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul_i(self.index, self.ctx._inv_i(j)))

    def __pow__(self, n: int):
        if n < 0:
            return FieldElement(self.ctx, self.ctx._pow_i(self.ctx._inv_i(self.index), -n))
        return FieldElement(self.ctx, self.ctx._pow_i(self.index, n))

    def inv(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._inv_i(self.index))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.index == other.index and self.ctx.params == other.ctx.params
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.params, self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"GF({self.ctx.Q})[{self.index}]"


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------


class FieldCtx:
    """Immutable description of the tower, with canonical moduli and tables.

    All operations are pure; a context can be shared freely across workers.
    """

    def __init__(self, p: int, e: int):
        self.params = FieldParams(p, e)
        self.p = p
        self.e = e
        self.q = self.params.q
        self.Q = self.params.Q

        self.base_modulus = _find_base_modulus(p, e)
        self._build_subfield_tables()

        self.ext_nonresidue_index = self._find_nonresidue()
        self._build_logs()

        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)
        self._tables: FieldTables | None = None

    # -- construction helpers ------------------------------------------------

    def _build_subfield_tables(self) -> None:
        p, e, q = self.p, self.e, self.q

        def digits(i: int) -> tuple[int, ...]:
            out = []
            for _ in range(e):
                out.append(i % p)
                i //= p
            return tuple(out)

        def undigits(cs) -> int:
            v = 0
            for c in reversed(list(cs)):
                v = v * p + c
            return v

        all_digits = [digits(i) for i in range(q)]
        self._q_add = [
            [undigits((x + y) % p for x, y in zip(da, db)) for db in all_digits]
            for da in all_digits
        ]
        self._q_neg = [undigits((-x) % p for x in da) for da in all_digits]
        mul = []
        for a in range(q):
            row = []
            for b in range(q):
                if b < a:
                    row.append(mul[b][a])
                else:
                    prod = _poly_mul(all_digits[a], all_digits[b], p)
                    row.append(undigits(_poly_rem(prod, self.base_modulus, p)))
            mul.append(row)
        self._q_mul = mul

    def _q_pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._q_mul[r][a]
            a = self._q_mul[a][a]
            n >>= 1
        return r

    def _find_nonresidue(self) -> int:
        neg_one = self._q_neg[1]
        for idx in range(1, self.q):
            if self._q_pow(idx, (self.q - 1) // 2) == neg_one:
                return idx
        raise AssertionError("GF(q) has no non-square")  # unreachable for odd q

    def _build_logs(self) -> None:
        Q = self.Q
        # factor Q - 1 for the order test
        rest, primes = Q - 1, []
        d = 2
        while d * d <= rest:
            if rest % d == 0:
                primes.append(d)
                while rest % d == 0:
                    rest //= d
            d += 1
        if rest > 1:
            primes.append(rest)

        gen = None
        for cand in range(2, Q):
            if all(self._pow_i(cand, (Q - 1) // r) != 1 for r in primes):
                gen = cand
                break
        assert gen is not None
        self.generator_index = gen

        exp = [1] * (Q - 1)
        for i in range(1, Q - 1):
            exp[i] = self._mul_i(exp[i - 1], gen)
        log = [0] * Q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
        # quadratic character from log parity: squares have even logs
        self._quad = [0] + [1 if self._log[v] % 2 == 0 else -1 for v in range(1, Q)]

    # -- index-level arithmetic (internal fast path) -------------------------

    def _add_i(self, i: int, j: int) -> int:
        q, qa = self.q, self._q_add
        return qa[i % q][j % q] + q * qa[i // q][j // q]

    def _neg_i(self, i: int) -> int:
        q, qn = self.q, self._q_neg
        return qn[i % q] + q * qn[i // q]

    def _mul_i(self, i: int, j: int) -> int:
        q, qm, qa = self.q, self._q_mul, self._q_add
        a1, b1 = i % q, i // q
        a2, b2 = j % q, j // q
        re = qa[qm[a1][a2]][qm[qm[b1][b2]][self.ext_nonresidue_index]]
        im = qa[qm[a1][b2]][qm[b1][a2]]
        return re + q * im

    def _pow_i(self, i: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._mul_i(r, i)
            i = self._mul_i(i, i)
            n >>= 1
        return r

    def _inv_i(self, i: int) -> int:
        if i == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._pow_i(i, self.Q - 2)

    def _frob_i(self, i: int) -> int:
        # (a + b*w)^q = a - b*w because w^q = -w
        q = self.q
        return i % q + q * self._q_neg[i // q]

    def _tq_i(self, i: int) -> int:
        return self._add_i(self._frob_i(i), self._neg_i(i))

    # -- public element API ---------------------------------------------------

    def element_from_index(self, i: int) -> FieldElement:
        if not 0 <= i < self.Q:
            raise IndexError(f"element index {i} out of range [0, {self.Q})")
        return FieldElement(self, i)

    def index_of(self, x: FieldElement) -> int:
        self._check(x)
        return x.index

    def from_int(self, n: int) -> FieldElement:
        """The prime-subfield element n * 1."""
        return FieldElement(self, n % self.p)

    def enumerate_field(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.Q)]

    def subfield_elements(self) -> list[FieldElement]:
        """The copy of GF(q) inside GF(Q): exactly the indices below q."""
        return [FieldElement(self, i) for i in range(self.q)]

    def _check(self, x: FieldElement) -> None:
        if x.ctx is not self and x.ctx.params != self.params:
            raise ValueError("element belongs to a different field context")

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a), self._check(b)
        return FieldElement(self, self._add_i(a.index, b.index))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a), self._check(b)
        return FieldElement(self, self._add_i(a.index, self._neg_i(b.index)))

    def neg(self, a: FieldElement) -> FieldElement:
        self._check(a)
        return FieldElement(self, self._neg_i(a.index))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a), self._check(b)
        return FieldElement(self, self._mul_i(a.index, b.index))

    def inv(self, a: FieldElement) -> FieldElement:
        self._check(a)
        return FieldElement(self, self._inv_i(a.index))

    def pow(self, a: FieldElement, n: int) -> FieldElement:
        self._check(a)
        if n < 0:
            raise ValueError("exponent must be non-negative")
        return FieldElement(self, self._pow_i(a.index, n))

    def frobenius_q(self, x: FieldElement) -> FieldElement:
        """x^q, the order-2 automorphism fixing GF(q)."""
        self._check(x)
        return FieldElement(self, self._frob_i(x.index))

    def trace_sub(self, x: FieldElement) -> FieldElement:
        """Trace onto the subfield: x^q + x."""
        self._check(x)
        return FieldElement(self, self._add_i(self._frob_i(x.index), x.index))

    def t_n(self, x: FieldElement, n: int) -> FieldElement:
        """x^n - x.  For n = q this vanishes exactly on the subfield."""
        if n < 1:
            raise ValueError("n must be positive")
        self._check(x)
        return FieldElement(self, self._add_i(self._pow_i(x.index, n), self._neg_i(x.index)))

    def t_q(self, x: FieldElement) -> FieldElement:
        self._check(x)
        return FieldElement(self, self._tq_i(x.index))

    def quad_char(self, x: FieldElement) -> int:
        """+1 for nonzero squares, -1 for non-squares, 0 for zero."""
        self._check(x)
        return self._quad[x.index]

    def is_square(self, x: FieldElement) -> bool:
        """True for squares, with zero counted as a square."""
        self._check(x)
        return self._quad[x.index] >= 0

    def in_subfield(self, x: FieldElement) -> bool:
        self._check(x)
        return x.index < self.q

    def half(self) -> FieldElement:
        """The inverse of 2 = 1 + 1 (p is odd, so this exists)."""
        return FieldElement(self, self._inv_i(self._add_i(1, 1)))

    @property
    def tables(self) -> "FieldTables":
        """Vectorized numpy tables, built lazily on first use."""
        if self._tables is None:
            self._tables = FieldTables(self)
        return self._tables

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, Q={self.Q})"


# ---------------------------------------------------------------------------
# Vectorized table layer
# ---------------------------------------------------------------------------

_ADD_TABLE_MAX = 2500  # full Q x Q addition table only below this size


class FieldTables:
    """numpy views of a FieldCtx for whole-grid arithmetic on index arrays.

    Multiplication uses padded discrete-log tables (zero maps to a sentinel
    log so products involving zero land in a zeroed region of the padded
    exponential table).  Addition is digitwise mod p, via a full table when
    Q is small enough and via base-p digit arithmetic otherwise.  Results
    are bit-identical to the scalar schoolbook path.
    """

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        Q, q, p = ctx.Q, ctx.q, ctx.p
        Qm1 = Q - 1
        self.Qm1 = Qm1

        self._log_zero = 2 * Qm1
        log = np.empty(Q, dtype=np.int64)
        log[0] = self._log_zero
        for v in range(1, Q):
            log[v] = ctx._log[v]
        self.log = log

        exp_pad = np.zeros(4 * Qm1 + 1, dtype=np.int32)
        for i in range(2 * Qm1):
            exp_pad[i] = ctx._exp[i % Qm1]
        self.exp_pad = exp_pad

        ar = np.arange(Q, dtype=np.int32)
        self.neg = np.array([ctx._neg_i(i) for i in range(Q)], dtype=np.int32)
        self.frob = np.array([ctx._frob_i(i) for i in range(Q)], dtype=np.int32)
        self.tq = np.array([ctx._tq_i(i) for i in range(Q)], dtype=np.int32)
        self.quad = np.array(ctx._quad, dtype=np.int8)
        inv = np.zeros(Q, dtype=np.int32)  # inv[0] stays 0; callers must mask
        inv[1:] = exp_pad[(Qm1 - log[1:]) % Qm1]
        self.inv = inv
        self.in_subfield = ar < q

        self._place = np.array([p**d for d in range(2 * ctx.e)], dtype=np.int32)
        self._digits = np.stack([(ar // p**d) % p for d in range(2 * ctx.e)]).astype(np.int32)

        if Q <= _ADD_TABLE_MAX:
            self._addt = self._digit_add(ar[:, None], ar[None, :])
        else:
            self._addt = None

    # inputs are integer arrays (any broadcastable shapes) of element indices

    def _digit_add(self, A, B):
        out = None
        for d in range(len(self._place)):
            term = ((self._digits[d][A] + self._digits[d][B]) % self.ctx.p) * self._place[d]
            out = term if out is None else out + term
        return out.astype(np.int32)

    def add(self, A, B):
        if self._addt is not None:
            return self._addt[A, B]
        return self._digit_add(A, B)

    def sub(self, A, B):
        return self.add(A, self.neg[B])

    def mul(self, A, B):
        return self.exp_pad[self.log[A] + self.log[B]]

    def pow(self, A, n: int):
        """Elementwise A**n for a fixed non-negative integer exponent."""
        if n == 0:
            return np.ones_like(np.asarray(A), dtype=np.int32)
        r = self.exp_pad[(self.log[A] * n) % self.Qm1]
        return np.where(np.asarray(A) == 0, 0, r).astype(np.int32)

    def digit_planes(self, A):
        """Base-p digits of an index array, shape (2e,) + A.shape."""
        return self._digits[:, A]

    def from_digit_planes(self, planes):
        """Inverse of digit_planes; planes need not be reduced mod p yet."""
        out = None
        for d in range(len(self._place)):
            term = (planes[d] % self.ctx.p) * self._place[d]
            out = term if out is None else out + term
        return out.astype(np.int32)


@lru_cache(maxsize=None)
def field_ctx(p: int, e: int) -> FieldCtx:
    """Shared, memoized context for the (p, e) tower."""
    return FieldCtx(p, e)
