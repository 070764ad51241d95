"""Univariate polynomials with arbitrary-precision integer coefficients.

IntPoly is the central object of the toolkit: the bundled polynomials, their
derivatives, resolvents and Sturm chains all live here.  Values are immutable
and every operation is exact; there is no floating point anywhere.

Resultant sign convention, used everywhere in this package:

    res(a, b) = lc(b)^deg(a) * prod a(beta_i)   over the roots beta_i of b.

This equals the Sylvester determinant times (-1)^(deg a * deg b).
"""

from fractions import Fraction
from math import gcd as int_gcd


class IntPoly:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for v in c:
            if not isinstance(v, int):
                raise TypeError(f"integer coefficients required, got {v!r}")
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                        for i in range(n)])

    def __sub__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                        for i in range(n)])

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c:+d}")
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                sign = "+" if c > 0 else "-"
                xpow = "x" if i == 1 else f"x^{i}"
                parts.append(f"{sign}{mag}{xpow}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self):
        """Gcd of the coefficients (non-negative)."""
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
        return g

    def primitive(self):
        """Divide out the content; the sign of the leading coefficient is kept."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly([c // g for c in self.coeffs])

    def scale_roots(self, c):
        """Polynomial whose roots are c * (roots of self), same leading coeff."""
        n = self.degree
        return IntPoly([a * c ** (n - i) for i, a in enumerate(self.coeffs)])

    def mod_small(self, p):
        """Coefficient list reduced mod p (for the F_p layer)."""
        out = [c % p for c in self.coeffs]
        while out and out[-1] == 0:
            out.pop()
        return out


X = IntPoly([0, 1])


def poly_arith(a, b, op):
    """Dispatcher form of the basic ring operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return divrem(a, b)
    raise ValueError(f"unknown operation {op!r}")


def divrem(a, b):
    """Exact division with remainder over Q, requiring integer output.

    Returns (q, r) with a = q*b + r and deg r < deg b.  Raises if b is zero or
    if the rational quotient/remainder is not integral (use pseudo_divrem for
    the fraction-free variant).
    """
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [Fraction(c) for c in a.coeffs]
    bc = b.coeffs
    db = len(bc) - 1
    q = [Fraction(0)] * max(len(r) - db, 0)
    lead = Fraction(bc[-1])
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        c = r[-1] / lead
        k = len(r) - 1 - db
        q[k] = c
        for i, bv in enumerate(bc):
            r[k + i] -= c * bv
        r.pop()
    for v in q + r:
        if v.denominator != 1:
            raise ValueError("division is not exact over the integers")
    return IntPoly([int(v) for v in q]), IntPoly([int(v) for v in r])


def pseudo_divrem(a, b):
    """Fraction-free division: lc(b)^(deg a - deg b + 1) * a = q*b + r.

    Returns (q, r, multiplier), no divisions performed.
    """
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero or a.degree < b.degree:
        return IntPoly(), a, 1
    lead = b.lc
    e = a.degree - b.degree + 1
    q = IntPoly()
    r = a
    while not r.is_zero and r.degree >= b.degree:
        k = r.degree - b.degree
        t = IntPoly([0] * k + [r.lc])
        q = q * lead + t
        r = r * lead - t * b
        e -= 1
    scale = lead ** max(e, 0)
    return q * scale, r * scale, lead ** (a.degree - b.degree + 1)


def prem(a, b):
    return pseudo_divrem(a, b)[1]


def gcd_int_poly(a, b):
    """Primitive gcd over Z via the primitive PRS, positive leading coeff."""
    if a.is_zero and b.is_zero:
        return IntPoly()
    if a.is_zero:
        f = b.primitive()
        return -f if f.lc < 0 else f
    if b.is_zero:
        f = a.primitive()
        return -f if f.lc < 0 else f
    f, g = a.primitive(), b.primitive()
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero and g.degree > 0:
        r = prem(f, g).primitive()
        f, g = g, r
    res = f if g.is_zero else IntPoly([1])
    if res.lc < 0:
        res = -res
    return res


def squarefree_part(a):
    """Product of the distinct irreducible factors over Q (primitive)."""
    if a.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    if a.degree == 0:
        return IntPoly([1])
    g = gcd_int_poly(a, a.derivative())
    if g.degree == 0:
        return a.primitive()
    num = a.primitive()
    # exact division over Q, then clear content
    q_frac = _exact_div_qq(num, g)
    return q_frac.primitive()


def _exact_div_qq(a, b):
    """a / b for b | a over Q, returned as a primitive-up-to-sign IntPoly."""
    q, r, m = pseudo_divrem(a, b)
    if not r.is_zero:
        raise ValueError("division is not exact")
    # q / m over Q: clear via content
    g = q.content()
    if g == 0:
        return IntPoly()
    scale = Fraction(g, m)
    qq = IntPoly([c // g for c in q.coeffs])
    if scale < 0:
        qq = -qq
    return qq


def is_squarefree(a):
    return gcd_int_poly(a, a.derivative()).degree == 0


def resultant(a, b):
    """Exact resultant via the primitive PRS with rational bookkeeping.

    Convention (documented in the module header):
        res(a, b) = lc(b)^deg(a) * prod a(beta_i) over roots beta_i of b,
    which is (-1)^(deg a * deg b) times the Sylvester determinant.
    """
    if a.is_zero or b.is_zero:
        raise ValueError("resultant of the zero polynomial")
    sylv = _sylvester_resultant(a, b)
    if (a.degree * b.degree) % 2 == 1:
        sylv = -sylv
    return sylv


def _sylvester_resultant(a, b):
    if a.degree == 0 and b.degree == 0:
        return 1
    acc = Fraction(1)
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2 == 1:
            acc = -acc
        a, b = b, a
    # pull contents out: res(c*A, B) = c^deg(B) * res(A, B)
    ca, cb = a.content(), b.content()
    A, B = a.primitive(), b.primitive()
    acc *= Fraction(ca) ** B.degree * Fraction(cb) ** A.degree
    while B.degree > 0:
        m, n = A.degree, B.degree
        R = prem(A, B)
        if R.is_zero:
            return 0
        c = R.content()
        Rp = IntPoly([v // c for v in R.coeffs])
        # res(A,B) = (-1)^(mn) lc(B)^(m - deg R - n(m-n+1)) c^n res(B, Rp)
        e = m - (len(R.coeffs) - 1) - n * (m - n + 1)
        acc *= Fraction(B.lc) ** e * Fraction(c) ** n
        if (m * n) % 2 == 1:
            acc = -acc
        A, B = B, Rp
    # B is a nonzero constant now: res(A, B) = B^deg(A)
    acc *= Fraction(B.coeffs[0]) ** A.degree
    assert acc.denominator == 1, "resultant bookkeeping lost integrality"
    return int(acc)


def discriminant(a):
    """disc(a) = (-1)^(n(n-1)/2) res(a, a') / lc(a), exact."""
    if a.is_zero or a.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    n = a.degree
    r = resultant(a, a.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val, remv = divmod(sign * r, a.lc)
    assert remv == 0, "lc must divide res(a, a')"
    return val


def sturm_chain(a):
    """Signed Sturm chain of a, as primitive integer polynomials.

    Each member is a positive rational multiple of the classical chain member
    (pseudo-remainder sign corrected by the multiplier sign, content always
    divided out positively), so sign variation counts match exactly.
    """
    chain = [a.primitive(), a.derivative().primitive()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        f, g = chain[-2], chain[-1]
        _, r, m = pseudo_divrem(f, g)
        nxt = -r if m > 0 else r
        chain.append(nxt.primitive())
    return chain


def _sign_variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def real_root_count(a):
    """Exact number of real roots of a squarefree polynomial, via Sturm."""
    if a.is_zero:
        raise ValueError("zero polynomial")
    if a.degree == 0:
        return 0
    chain = [f for f in sturm_chain(a) if not f.is_zero]
    if chain[-1].degree > 0:
        raise ValueError("real_root_count requires a squarefree input")
    def sgn(x):
        return (x > 0) - (x < 0)
    at_plus = [sgn(f.lc) for f in chain]
    at_minus = [sgn(f.lc) * (-1 if f.degree % 2 else 1) for f in chain]
    return _sign_variations(at_minus) - _sign_variations(at_plus)


def real_roots_in_interval(a, lo, hi):
    """Number of real roots of squarefree a in (lo, hi], exact rational endpoints."""
    chain = [f for f in sturm_chain(a) if not f.is_zero]
    if chain[-1].degree > 0:
        raise ValueError("squarefree input required")
    def variations_at(x):
        signs = []
        for f in chain:
            v = f.evaluate(Fraction(x))
            signs.append((v > 0) - (v < 0))
        return _sign_variations(signs)
    return variations_at(lo) - variations_at(hi)


# ---------------------------------------------------------------------------
# text format: one polynomial per file, whitespace-separated decimal
# coefficients from the constant term upward; '#' starts a comment line.

def poly_to_text(a):
    return " ".join(str(c) for c in a.coeffs) + "\n"


def poly_from_text(text):
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if not tokens:
        return IntPoly()
    return IntPoly([int(t) for t in tokens])


def read_poly(path):
    with open(path, "r", encoding="ascii") as fh:
        return poly_from_text(fh.read())


def write_poly(path, a):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(poly_to_text(a))
