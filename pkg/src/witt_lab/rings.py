"""Exact arithmetic, enumeration, and structural queries for small finite
commutative rings.

Every ring here is finite and commutative, with canonical payloads: two
elements are equal iff their payloads compare equal.  Payloads are plain
data (ints and nested tuples), so equality and ordering are syntactic.
"""
from __future__ import annotations

import itertools
from math import lcm

DEFAULT_ENUMERATION_CAP = 4096


class RingError(Exception):
    """Base class for ring construction and arithmetic errors."""


class EnumerationCapExceeded(RingError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"ring of order {order} exceeds enumeration cap {cap}")
        self.order = order
        self.cap = cap


class MismatchedParents(RingError):
    pass


class NonMonicModulus(RingError):
    pass


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class Ring:
    """Abstract finite commutative ring operating on canonical payloads.

    Subclasses implement `_add`, `_mul`, `_neg` and `_payloads` on payloads;
    the public API wraps payloads in `RingElement`.
    """

    kind = "abstract"

    def __init__(self, order: int):
        if order < 1:
            raise RingError("ring order must be positive")
        self.order = order
        self._char: int | None = None
        self._zero = None
        self._one = None

    # ---- payload-level operations (subclass responsibility) ----

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _payloads(self):
        """Yield every payload exactly once, in canonical order."""
        raise NotImplementedError

    def _format(self, a) -> str:
        return repr(a)

    # ---- generic payload helpers ----

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _pow(self, a, e: int):
        if e < 0:
            raise RingError("negative exponent in finite ring power")
        result = self._one
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _smul(self, k: int, a):
        """k*a for an integer k, by double-and-add."""
        if k < 0:
            return self._neg(self._smul(-k, a))
        result = self._zero
        base = a
        while k:
            if k & 1:
                result = self._add(result, base)
            base = self._add(base, base)
            k >>= 1
        return result

    def _int(self, k: int):
        """Image of the integer k under the unique map Z -> R."""
        return self._smul(k % self.characteristic, self._one)

    # ---- public API ----

    @property
    def zero(self) -> RingElement:
        return RingElement(self, self._zero)

    @property
    def one(self) -> RingElement:
        return RingElement(self, self._one)

    @property
    def characteristic(self) -> int:
        if self._char is None:
            self._char = self._additive_order(self._one)
        return self._char

    def _additive_order(self, a) -> int:
        # the additive order divides the ring order (Lagrange)
        for d in _divisors(self.order):
            if self._smul(d, a) == self._zero:
                return d
        raise RingError("no additive order found; broken ring arithmetic")

    def element(self, payload) -> RingElement:
        return RingElement(self, payload)

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> list[RingElement]:
        if self.order > cap:
            raise EnumerationCapExceeded(self.order, cap)
        return [RingElement(self, a) for a in self._payloads()]

    def __repr__(self):
        return f"<{self.kind} ring of order {self.order}>"


class RingElement:
    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other) -> "RingElement":
        if not isinstance(other, RingElement) or other.ring is not self.ring:
            raise MismatchedParents(f"cannot combine {self!r} with {other!r}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.ring._sub(self.payload, other.payload))

    def __mul__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.ring._mul(self.payload, other.payload))

    def __rmul__(self, k):
        if isinstance(k, int):
            return RingElement(self.ring, self.ring._smul(k, self.payload))
        return NotImplemented

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.payload))

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring._pow(self.payload, e))

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and other.ring is self.ring
            and other.payload == self.payload
        )

    def __hash__(self):
        return hash(self.payload)

    def is_zero(self) -> bool:
        return self.payload == self.ring._zero

    def __repr__(self):
        return self.ring._format(self.payload)


# ---------------------------------------------------------------------------
# Concrete constructions
# ---------------------------------------------------------------------------


class ZModRing(Ring):
    """Z/mZ with canonical representatives 0..m-1."""

    kind = "zmod"

    def __init__(self, m: int):
        if m < 1:
            raise RingError("modulus must be >= 1")
        super().__init__(m)
        self.modulus = m
        self._zero = 0
        self._one = 1 % m
        self._char = m

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _mul(self, a, b):
        return (a * b) % self.modulus

    def _neg(self, a):
        return (-a) % self.modulus

    def _smul(self, k, a):
        return (k * a) % self.modulus

    def _int(self, k):
        return k % self.modulus

    def _payloads(self):
        return iter(range(self.modulus))

    def _format(self, a):
        return str(a)


class PolyQuotientRing(Ring):
    """base[x]/(f) for a monic modulus f; payloads are coefficient tuples
    (c0, ..., c_{d-1}) of base payloads, constant term first."""

    kind = "poly-quotient"

    def __init__(self, base: Ring, modulus, var: str = "x"):
        # modulus: coefficients c0..cd (constant first) as base payloads or
        # RingElements; cd must be 1
        coeffs = [c.payload if isinstance(c, RingElement) else c for c in modulus]
        if len(coeffs) < 2:
            raise NonMonicModulus("modulus must have degree >= 1")
        if coeffs[-1] != base._one:
            raise NonMonicModulus("modulus must be monic")
        self.base = base
        self.var = var
        self.degree = len(coeffs) - 1
        self.modulus_coeffs = tuple(coeffs)
        # x^d = sum_j reduction[j] * x^j
        self._reduction = tuple(base._neg(c) for c in coeffs[:-1])
        super().__init__(base.order ** self.degree)
        self._zero = (base._zero,) * self.degree
        self._one = (base._one,) + (base._zero,) * (self.degree - 1)

    def _add(self, a, b):
        B = self.base
        return tuple(B._add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        B = self.base
        return tuple(B._neg(x) for x in a)

    def _mul(self, a, b):
        B = self.base
        d = self.degree
        prod = [B._zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == B._zero:
                continue
            for j, y in enumerate(b):
                prod[i + j] = B._add(prod[i + j], B._mul(x, y))
        # reduce top-down using x^d = reduction
        for k in range(2 * d - 2, d - 1, -1):
            t = prod[k]
            if t == B._zero:
                continue
            prod[k] = B._zero
            for j, r in enumerate(self._reduction):
                prod[k - d + j] = B._add(prod[k - d + j], B._mul(t, r))
        return tuple(prod[:d])

    def _int(self, k):
        return (self.base._int(k),) + (self.base._zero,) * (self.degree - 1)

    def _payloads(self):
        # degree-major order: constants first, matching [0, 1, x, 1+x, ...]
        base_payloads = list(self.base._payloads())
        for rev in itertools.product(base_payloads, repeat=self.degree):
            yield tuple(reversed(rev))

    def _format(self, a):
        parts = []
        for i, c in enumerate(a):
            if c == self.base._zero:
                continue
            cs = self.base._format(c)
            if i == 0:
                parts.append(cs)
            else:
                xs = self.var if i == 1 else f"{self.var}^{i}"
                parts.append(xs if cs == "1" else f"{cs}*{xs}")
        return "+".join(parts) if parts else "0"


class ProductRing(Ring):
    """Componentwise product of two finite rings; payloads are pairs."""

    kind = "product"

    def __init__(self, a: Ring, b: Ring):
        self.factors = (a, b)
        super().__init__(a.order * b.order)
        self._zero = (a._zero, b._zero)
        self._one = (a._one, b._one)
        self._char = lcm(a.characteristic, b.characteristic)

    def _add(self, x, y):
        a, b = self.factors
        return (a._add(x[0], y[0]), b._add(x[1], y[1]))

    def _mul(self, x, y):
        a, b = self.factors
        return (a._mul(x[0], y[0]), b._mul(x[1], y[1]))

    def _neg(self, x):
        a, b = self.factors
        return (a._neg(x[0]), b._neg(x[1]))

    def _int(self, k):
        a, b = self.factors
        return (a._int(k), b._int(k))

    def _payloads(self):
        a, b = self.factors
        for x in a._payloads():
            for y in b._payloads():
                yield (x, y)

    def _format(self, x):
        a, b = self.factors
        return f"({a._format(x[0])},{b._format(x[1])})"


class QuotientRing(Ring):
    """R/I for an enumerated ideal I; payloads are the least ambient payload
    in each coset."""

    kind = "quotient-by-ideal"

    def __init__(self, ambient: Ring, ideal_payloads, cap: int = DEFAULT_ENUMERATION_CAP):
        if ambient.order > cap:
            raise EnumerationCapExceeded(ambient.order, cap)
        self.ambient = ambient
        ideal = frozenset(ideal_payloads)
        if ambient._zero not in ideal:
            raise RingError("ideal must contain zero")
        self.ideal = ideal
        canon: dict = {}
        for a in ambient._payloads():
            if a in canon:
                continue
            coset = sorted(ambient._add(a, i) for i in ideal)
            rep = coset[0]
            for c in coset:
                canon[c] = rep
        self._canon = canon
        reps = sorted(set(canon.values()))
        self._reps = reps
        super().__init__(len(reps))
        if ambient.order % len(ideal) != 0:
            raise RingError("ideal size does not divide ring order; not an ideal")
        self._zero = canon[ambient._zero]
        self._one = canon[ambient._one]

    def _add(self, a, b):
        return self._canon[self.ambient._add(a, b)]

    def _mul(self, a, b):
        return self._canon[self.ambient._mul(a, b)]

    def _neg(self, a):
        return self._canon[self.ambient._neg(a)]

    def _int(self, k):
        return self._canon[self.ambient._int(k)]

    def _payloads(self):
        return iter(self._reps)

    def _format(self, a):
        return self.ambient._format(a)

    def project(self, x: RingElement) -> RingElement:
        if x.ring is not self.ambient:
            raise MismatchedParents("projection applied to foreign element")
        return RingElement(self, self._canon[x.payload])


# ---------------------------------------------------------------------------
# Constructors named after what they build
# ---------------------------------------------------------------------------


def make_zmod(m: int) -> ZModRing:
    return ZModRing(m)


def make_poly_quotient(base: Ring, modulus, var: str = "x") -> PolyQuotientRing:
    return PolyQuotientRing(base, modulus, var=var)


def make_product(a: Ring, b: Ring) -> ProductRing:
    return ProductRing(a, b)


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------


def additive_order(x: RingElement) -> int:
    return x.ring._additive_order(x.payload)


def nilpotency_index(x: RingElement) -> int | None:
    """Least k with x^k = 0, or None if x is not nilpotent.

    In a finite ring x is nilpotent iff x^|R| = 0, so the search is bounded.
    """
    R = x.ring
    power = x.payload
    for k in range(1, R.order + 1):
        if k == 1:
            power = x.payload
        else:
            power = R._mul(power, x.payload)
        if power == R._zero:
            return k
    return None


def ideal_closure(R: Ring, gens, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """The ideal generated by gens, as a sorted list of payloads.

    Computed as the additive closure of all multiples g*r; breadth-first.
    """
    if R.order > cap:
        raise EnumerationCapExceeded(R.order, cap)
    gen_payloads = [g.payload if isinstance(g, RingElement) else g for g in gens]
    multiples = {R._zero}
    for g in gen_payloads:
        for r in R._payloads():
            multiples.add(R._mul(g, r))
    span = {R._zero}
    frontier = [R._zero]
    while frontier:
        a = frontier.pop()
        for m in multiples:
            s = R._add(a, m)
            if s not in span:
                span.add(s)
                frontier.append(s)
    return sorted(span)


def quotient_by_ideal(R: Ring, gens, cap: int = DEFAULT_ENUMERATION_CAP):
    """Quotient of R by the ideal generated by gens.

    Returns (quotient ring, projection map R -> quotient).
    """
    ideal = ideal_closure(R, gens, cap=cap)
    Q = QuotientRing(R, ideal, cap=cap)
    return Q, Q.project


def localize_at(R: Ring, s: RingElement, exponent: int | None = None,
                cap: int = DEFAULT_ENUMERATION_CAP):
    """Localization R[s^{-1}] of a finite ring, realized as R/(1-e)R for the
    idempotent power e of s.

    Returns (localized ring, map R -> R_s).  `exponent` may force a specific
    power l (it must be a valid idempotent exponent: l >= a and d | l for the
    eventual cycle s^a = s^{a+d}).
    """
    if s.ring is not R:
        raise MismatchedParents("localization element from foreign ring")
    # find a, d with s^a = s^{a+d} (powers of s eventually cycle)
    seen: dict = {}
    power = R._one
    k = 0
    while power not in seen:
        seen[power] = k
        power = R._mul(power, s.payload)
        k += 1
    a = seen[power]
    d = k - a
    if exponent is None:
        l = max(a, 1)
        l = d * ((l + d - 1) // d)
    else:
        l = exponent
        if l < max(a, 1) or l % d != 0:
            raise RingError(f"exponent {l} does not yield an idempotent power of s")
    e = R._pow(s.payload, l)
    one_minus_e = R._sub(R._one, e)
    return quotient_by_ideal(R, [R.element(one_minus_e)], cap=cap)


def idempotents(R: Ring, cap: int = DEFAULT_ENUMERATION_CAP) -> list[RingElement]:
    if R.order > cap:
        raise EnumerationCapExceeded(R.order, cap)
    return [R.element(a) for a in R._payloads() if R._mul(a, a) == a]


def local_factors(R: Ring, cap: int = DEFAULT_ENUMERATION_CAP):
    """Decompose R along its primitive idempotents.

    Returns a list of (factor ring, projection) pairs, one per primitive
    idempotent, each factor realized as R/(1-e)R.  The product of the factors
    is isomorphic to R.
    """
    idems = [e.payload for e in idempotents(R, cap=cap)]
    primitive = []
    for e in idems:
        if e == R._zero:
            continue
        ok = True
        for f in idems:
            ef = R._mul(e, f)
            if ef != R._zero and ef != e:
                ok = False
                break
        if ok:
            primitive.append(e)
    primitive.sort()
    factors = []
    for e in primitive:
        one_minus_e = R._sub(R._one, e)
        factors.append(quotient_by_ideal(R, [R.element(one_minus_e)], cap=cap))
    return factors


def p_torsion_ideal(R: Ring, p: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[RingElement]:
    """All r with p^m r = 0 for some m; m is bounded by v_p(char R)."""
    if R.order > cap:
        raise EnumerationCapExceeded(R.order, cap)
    char = R.characteristic
    vp = 0
    while char % p == 0:
        char //= p
        vp += 1
    k = p ** vp
    return [R.element(a) for a in R._payloads() if R._smul(k, a) == R._zero]
