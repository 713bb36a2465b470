"""Exact dense univariate polynomial arithmetic over pluggable coefficient domains.

Polynomials are stored as ascending-degree coefficient tuples over one of three
exact domains: arbitrary-precision integers (``ZZ``), rationals (``QQ``), or
integer-coefficient polynomials (``ZZ_POLY``, used for bivariate work: a
polynomial in t whose coefficients are polynomials in z).  On top of the ring
arithmetic sit the classical exact tools: subresultant pseudo-remainder
resultants, discriminants, primitive-PRS gcd, and Sturm-chain counting of
distinct real roots on half-open intervals (lo, hi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd_scalar
from math import lcm as _int_lcm_scalar
from typing import Iterable, Sequence, Union


class Domain:
    """An exact coefficient ring.

    The six primitive operations (add/sub/mul/divexact/is_zero/sign) are all
    the resultant, gcd, and Sturm machinery needs, so the same code runs over
    integers, rationals, and integer polynomials.  ``divexact`` must be exact:
    it raises if the quotient would leave a remainder.
    """

    name = "abstract"
    zero: object = None
    one: object = None

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def divexact(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def sign(self, a) -> int:
        raise NotImplementedError

    def coerce(self, x):
        """Convert ``x`` into a domain element (construction helper)."""
        raise NotImplementedError

    def __repr__(self):
        return self.name


class _IntDomain(Domain):
    name = "ZZ"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def divexact(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"inexact integer division {a} / {b}")
        return q

    def is_zero(self, a):
        return a == 0

    def sign(self, a):
        return (a > 0) - (a < 0)

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not an integer coefficient")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise TypeError(f"cannot coerce {x!r} into ZZ")


class _FractionDomain(Domain):
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def divexact(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def sign(self, a):
        return (a > 0) - (a < 0)

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a rational coefficient")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")


class PolyDomain(Domain):
    """Coefficients that are themselves ExactPoly values over a base domain.

    Nesting one level gives bivariate arithmetic: the resultant of two
    polynomials in t over ``PolyDomain(ZZ)`` is a polynomial in z.
    """

    def __init__(self, base: Domain):
        self.base = base
        self.name = f"{base.name}[poly]"
        self.zero = ExactPoly((), base)
        self.one = ExactPoly((base.one,), base)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def divexact(self, a, b):
        return a.divexact(b)

    def is_zero(self, a):
        return a.is_zero()

    def sign(self, a):
        # Sign of the leading coefficient; the convention polynomial
        # orderings use.  Zero polynomial has sign 0.
        return 0 if a.is_zero() else self.base.sign(a.lead())

    def coerce(self, x):
        if isinstance(x, ExactPoly):
            if x.domain is not self.base:
                raise TypeError(f"coefficient domain {x.domain} != {self.base}")
            return x
        return ExactPoly((self.base.coerce(x),), self.base)


ZZ = _IntDomain()
QQ = _FractionDomain()

NEG_INF = -math.inf
POS_INF = math.inf

Coefficient = Union[int, Fraction, "ExactPoly"]


def _dom_pow(dom: Domain, x, k: int):
    acc = dom.one
    for _ in range(k):
        acc = dom.mul(acc, x)
    return acc


class ExactPoly:
    """Dense exact polynomial, ascending degree, trailing coefficient nonzero.

    The zero polynomial is the empty coefficient tuple.  Instances are
    immutable; every operation returns a fresh polynomial, so values can be
    shared freely across threads.
    """

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs: Iterable[Coefficient] = (), domain: Domain = ZZ):
        cs = [domain.coerce(c) for c in coeffs]
        while cs and domain.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self):
        """Coefficient of degree 0."""
        return self.coeffs[0] if self.coeffs else self.domain.zero

    # -- ring arithmetic ---------------------------------------------------

    def _check_domain(self, other: "ExactPoly"):
        if not isinstance(other, ExactPoly):
            raise TypeError(f"expected ExactPoly, got {type(other).__name__}")
        if other.domain is not self.domain:
            raise ValueError(f"domain mismatch: {self.domain} vs {other.domain}")

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        self._check_domain(other)
        dom = self.domain
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = dom.add(out[i], c)
        return ExactPoly(out, dom)

    def __neg__(self) -> "ExactPoly":
        dom = self.domain
        return ExactPoly([dom.sub(dom.zero, c) for c in self.coeffs], dom)

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        self._check_domain(other)
        dom = self.domain
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPoly((), dom)
        out = [dom.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if dom.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = dom.add(out[i + j], dom.mul(x, y))
        return ExactPoly(out, dom)

    def scale(self, k) -> "ExactPoly":
        """Multiply by a scalar from the coefficient domain."""
        dom = self.domain
        k = dom.coerce(k)
        return ExactPoly([dom.mul(c, k) for c in self.coeffs], dom)

    def shift(self, n: int) -> "ExactPoly":
        """Multiply by variable**n."""
        if self.is_zero():
            return self
        return ExactPoly((self.domain.zero,) * n + self.coeffs, self.domain)

    def __pow__(self, n: int) -> "ExactPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = ExactPoly((self.domain.one,), self.domain)
        for _ in range(n):
            acc = acc * self
        return acc

    def derivative(self) -> "ExactPoly":
        dom = self.domain
        out = [dom.mul(dom.coerce(i), self.coeffs[i]) for i in range(1, len(self.coeffs))]
        return ExactPoly(out, dom)

    def divexact(self, other: "ExactPoly") -> "ExactPoly":
        """Exact polynomial division; raises ArithmeticError on a remainder."""
        self._check_domain(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        dom = self.domain
        r = list(self.coeffs)
        b = other.coeffs
        if len(r) < len(b):
            if not r:
                return ExactPoly((), dom)
            raise ArithmeticError("inexact polynomial division")
        q = [dom.zero] * (len(r) - len(b) + 1)
        while r and len(r) >= len(b):
            c = dom.divexact(r[-1], b[-1])
            sh = len(r) - len(b)
            q[sh] = c
            for j, y in enumerate(b):
                r[sh + j] = dom.sub(r[sh + j], dom.mul(c, y))
            while r and dom.is_zero(r[-1]):
                r.pop()
        if r:
            raise ArithmeticError("inexact polynomial division")
        return ExactPoly(q, dom)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x):
        return poly_eval(self, x)

    # -- conversions ---------------------------------------------------------

    def to_fractions(self) -> "ExactPoly":
        """Promote an integer polynomial to the rational domain."""
        if self.domain is QQ:
            return self
        if self.domain is ZZ:
            return ExactPoly([Fraction(c) for c in self.coeffs], QQ)
        raise TypeError(f"cannot promote {self.domain} polynomial to QQ")

    def coeff_strings(self) -> list[str]:
        """Coefficients as exact decimal strings (p/q for proper fractions)."""
        if isinstance(self.domain, PolyDomain):
            raise TypeError("nested polynomials have no flat string form")
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction) and c.denominator != 1:
                out.append(f"{c.numerator}/{c.denominator}")
            else:
                out.append(str(int(c)))
        return out

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ExactPoly)
            and self.domain is other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.domain), self.coeffs))

    def __repr__(self):
        return f"ExactPoly({list(self.coeffs)!r}, {self.domain.name})"

    def format(self, var: str = "z") -> str:
        """Human-readable form like '2z + 147', constant-first omitted zeros."""
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if isinstance(c, ExactPoly):
                cs = f"({c.format(var)})"
                if c.is_zero():
                    continue
            else:
                if c == 0:
                    continue
                cs = str(c)
            if i == 0:
                parts.append(cs)
            else:
                head = "" if cs == "1" else ("-" if cs == "-1" else cs)
                mono = var if i == 1 else f"{var}^{i}"
                parts.append(f"{head}{mono}" if head in ("", "-") else f"{head}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZZ_POLY = PolyDomain(ZZ)


# ---------------------------------------------------------------------------
# spec'd operation surface
# ---------------------------------------------------------------------------


def poly_mul(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Exact product; degree adds for nonzero inputs."""
    return a * b


def poly_eval(p: ExactPoly, x):
    """Horner evaluation.

    Exact when ``x`` is an int or Fraction; numeric (float/complex) otherwise.
    For nested polynomials the coefficients must support mixed arithmetic with
    ``x``, which int and Fraction coefficients do.
    """
    if isinstance(p.domain, PolyDomain):
        raise TypeError("use specialize() to evaluate the inner variable")
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        acc = Fraction(0)
        for c in reversed(p.coeffs):
            acc = acc * x + c
        if p.domain is ZZ and isinstance(x, int):
            return int(acc)
        return acc
    acc = 0.0 if not isinstance(x, complex) else 0j
    for c in reversed(p.coeffs):
        acc = acc * x + (float(c) if not isinstance(x, complex) else complex(c))
    return acc


def specialize(p: ExactPoly, x) -> ExactPoly:
    """Evaluate the coefficient-level variable of a nested polynomial.

    For p in t with ExactPoly-over-ZZ coefficients in z, returns the
    univariate polynomial p(t, x) in t (over ZZ for int x, QQ otherwise).
    """
    if not isinstance(p.domain, PolyDomain):
        raise TypeError("specialize() expects a nested polynomial")
    vals = [poly_eval(c, x) for c in p.coeffs]
    target = ZZ if isinstance(x, int) and not isinstance(x, bool) else QQ
    return ExactPoly(vals, target)


def _prem(a: Sequence, b: Sequence, dom: Domain) -> list:
    """Pseudo-remainder: lead(b)**(deg a - deg b + 1) * a  mod  b.

    Raw coefficient-list kernel; assumes deg a >= deg b >= 0.
    """
    db = len(b) - 1
    d = b[-1]
    r = list(a)
    e = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        r = [dom.mul(d, c) for c in r]
        sh = len(r) - 1 - db
        for j, y in enumerate(b):
            r[sh + j] = dom.sub(r[sh + j], dom.mul(lr, y))
        while r and dom.is_zero(r[-1]):
            r.pop()
        e -= 1
    m = _dom_pow(dom, d, e)
    return [dom.mul(m, c) for c in r]


def resultant(a: ExactPoly, b: ExactPoly):
    """Resultant via the subresultant pseudo-remainder sequence.

    Exact over any of the coefficient domains; the sign bookkeeping follows
    the classical subresultant algorithm, with the exact divisions guaranteed
    by the subresultant theory.
    """
    if not isinstance(b, ExactPoly):
        raise TypeError("resultant expects two ExactPoly arguments")
    a._check_domain(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    dom = a.domain
    s = 1
    if a.degree() < b.degree():
        if a.degree() % 2 == 1 and b.degree() % 2 == 1:
            s = -s
        a, b = b, a
    if b.degree() == 0:
        if a.degree() == 0:
            return dom.one
        res = _dom_pow(dom, b.lead(), a.degree())
        return res if s == 1 else dom.sub(dom.zero, res)

    A = list(a.coeffs)
    B = list(b.coeffs)
    g = dom.one
    h = dom.one
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _prem(A, B, dom)
        if not R:
            # positive-degree common factor
            return dom.zero
        divisor = dom.mul(g, _dom_pow(dom, h, delta))
        A = B
        B = [dom.divexact(c, divisor) for c in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = dom.divexact(_dom_pow(dom, g, delta), _dom_pow(dom, h, delta - 1))
        if len(B) - 1 == 0:
            break
    dA = len(A) - 1
    num = _dom_pow(dom, B[-1], dA)
    res = dom.divexact(num, _dom_pow(dom, h, dA - 1)) if dA > 1 else num
    return res if s == 1 else dom.sub(dom.zero, res)


def discriminant(p: ExactPoly):
    """Discriminant: (-1)**(n(n-1)/2) * Res(p, p') / lead(p), n = deg p >= 1."""
    n = p.degree()
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    dom = p.domain
    r = resultant(p, p.derivative())
    d = dom.divexact(r, p.lead())
    if (n * (n - 1) // 2) % 2 == 1:
        d = dom.sub(dom.zero, d)
    return d


# ---------------------------------------------------------------------------
# integer-coefficient kernels for gcd / squarefree / Sturm
# ---------------------------------------------------------------------------
# These run on raw int lists: the Sturm certification is the hot path of the
# whole package, and primitive-part normalization after every pseudo-division
# is what keeps the coefficient growth polynomial instead of exponential.


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content(c: Sequence[int]) -> int:
    g = 0
    for x in c:
        g = _int_gcd_scalar(g, x)
    return g


def _primitive(c: Sequence[int]) -> list:
    c = _trim(list(c))
    if not c:
        return []
    g = _content(c)
    return [x // g for x in c]


def _int_prem_pos(a: Sequence[int], b: Sequence[int]) -> list:
    """Pseudo-remainder scaled so the overall multiplier of ``a`` is positive."""
    db = len(b) - 1
    d = b[-1]
    r = list(a)
    e = len(a) - 1 - db + 1
    total = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        r = [d * c for c in r]
        sh = len(r) - 1 - db
        for j, y in enumerate(b):
            r[sh + j] -= lr * y
        _trim(r)
        e -= 1
    if e:
        m = d**e
        r = [m * c for c in r]
    if d < 0 and total % 2 == 1:
        r = [-c for c in r]
    return r


def _int_list(p: ExactPoly) -> list[int]:
    """Primitive integer coefficient list of a ZZ or QQ polynomial."""
    if p.domain is ZZ:
        return _primitive(p.coeffs)
    if p.domain is QQ:
        den = 1
        for c in p.coeffs:
            den = _int_lcm_scalar(den, c.denominator)
        return _primitive([int(c * den) for c in p.coeffs])
    raise TypeError("integer/rational polynomial expected")


def clear_denominators(p: ExactPoly) -> ExactPoly:
    """Positive rescale of a QQ (or ZZ) polynomial to a primitive ZZ one.

    The root set is unchanged: the scaling factor is a positive rational.
    """
    return ExactPoly(_int_list(p), ZZ)


def poly_gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Primitive gcd of integer/rational polynomials (positive leading sign)."""
    ca, cb = _int_list(a), _int_list(b)
    if len(ca) < len(cb):
        ca, cb = cb, ca
    while cb:
        r = _int_prem_pos(ca, cb)
        ca, cb = cb, _primitive(r)
    if ca and ca[-1] < 0:
        ca = [-x for x in ca]
    return ExactPoly(ca, ZZ)


def squarefree_part(p: ExactPoly) -> ExactPoly:
    """Primitive squarefree part: same distinct roots, all simple."""
    c = _int_list(p)
    if not c:
        raise ValueError("zero polynomial has no squarefree part")
    if len(c) == 1:
        return ExactPoly([1], ZZ)
    g = poly_gcd(ExactPoly(c, ZZ), ExactPoly(_trim([i * c[i] for i in range(1, len(c))]), ZZ))
    if g.degree() == 0:
        sf = c
    else:
        sf = _int_list(ExactPoly(c, ZZ).to_fractions().divexact(g.to_fractions()))
    if sf[-1] < 0:
        sf = [-x for x in sf]
    return ExactPoly(sf, ZZ)


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain of the squarefree part of a polynomial.

    ``chain`` holds primitive integer polynomials: each is the content-stripped
    negated pseudo-remainder of the two before it, so consecutive elements obey
    the negated-remainder relation up to a positive rational factor, which is
    all sign-variation counting needs.  The last element is a nonzero constant.
    """

    chain: tuple[ExactPoly, ...]
    source: ExactPoly

    def variations_at(self, x) -> int:
        """Sign variations at x (an int/Fraction, or +-math.inf), zeros skipped."""
        signs = []
        for p in self.chain:
            if p.is_zero():
                signs.append(0)
            elif x == POS_INF:
                signs.append(ZZ.sign(p.lead()))
            elif x == NEG_INF:
                s = ZZ.sign(p.lead())
                signs.append(s if p.degree() % 2 == 0 else -s)
            else:
                v = poly_eval(p.to_fractions(), Fraction(x))
                signs.append((v > 0) - (v < 0))
        nz = [s for s in signs if s]
        return sum(1 for i in range(len(nz) - 1) if nz[i] != nz[i + 1])

    def count(self, lo, hi) -> int:
        """Distinct real roots of the source on the half-open interval (lo, hi]."""
        if not (lo == NEG_INF or isinstance(lo, (int, Fraction))):
            raise TypeError("lo must be exact (int/Fraction) or -inf")
        if not (hi == POS_INF or isinstance(hi, (int, Fraction))):
            raise TypeError("hi must be exact (int/Fraction) or +inf")
        if not lo < hi:
            raise ValueError(f"empty interval ({lo}, {hi}]")
        return self.variations_at(lo) - self.variations_at(hi)


def sturm_chain(p: ExactPoly) -> SturmChain:
    """Build the Sturm chain of the squarefree part of ``p``."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    sf = squarefree_part(p)
    c = list(sf.coeffs)
    if len(c) <= 1:
        return SturmChain((sf,), sf)
    chain = [c, _primitive([i * c[i] for i in range(1, len(c))])]
    while len(chain[-1]) > 1:
        r = _int_prem_pos(chain[-2], chain[-1])
        nxt = _primitive([-x for x in r])
        if not nxt:
            raise AssertionError("squarefree input produced a zero remainder")
        chain.append(nxt)
    return SturmChain(tuple(ExactPoly(c, ZZ) for c in chain), sf)


def sturm_count(p: ExactPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in (lo, hi].

    ``lo``/``hi`` are exact rationals or +-math.inf; multiple roots count once
    (the chain is built from the squarefree part).
    """
    return sturm_chain(p).count(lo, hi)
