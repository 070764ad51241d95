"""Mod-p factorization patterns, irreducibility certificates and the
pair-resolvent double-transitivity test.

The degree-set sieve: for a good prime p, the factor degrees of P mod p
constrain the degrees of any factorization over Q (a rational factor reduces
to a sub-product mod p).  Intersecting the achievable proper-factor degree
sets over many primes can collapse to {0, deg P}, certifying irreducibility.
Applied to the resolvent with roots s*alpha + t*beta over ordered distinct
root pairs, the same sieve certifies double transitivity of the Galois
group: that resolvent is irreducible exactly when the group is doubly
transitive on the roots.
"""

from dataclasses import dataclass, field as dc_field

from . import gfp
from .ffield import make_field
from .intpoly import IntPoly


@dataclass(frozen=True)
class FactorPattern:
    """Multiset of (degree, multiplicity) pairs of mod-p irreducible factors."""
    p: int
    parts: tuple  # sorted tuple of (degree, multiplicity)

    @property
    def total_degree(self):
        return sum(d * m for d, m in self.parts)

    def degrees_with_multiplicity(self):
        """Flat list of factor degrees, one entry per irreducible factor."""
        out = []
        for d, m in self.parts:
            out.append((d, m))
        return out

    def __str__(self):
        return " ".join(f"{d}^{m}" if m > 1 else str(d) for d, m in self.parts)


def factor_mod_p(a, p, with_factors=False):
    """Complete factorization pattern of a mod p.

    Returns a FactorPattern; with_factors=True returns (pattern, lc, factors)
    where factors is the list of (monic irreducible coefficient list, mult).
    The product of the returned factors times lc equals the input mod p,
    which is asserted on every call.
    """
    f = a.mod_small(p)
    if not f:
        raise ZeroDivisionError(f"polynomial vanishes mod {p}")
    if with_factors:
        lc, facs = gfp.factor(f, p)
        prod = [lc]
        for g, e in facs:
            for _ in range(e):
                prod = gfp.mul(prod, g, p)
        assert prod == f, "factorization product check failed"
        parts = tuple(sorted((gfp.degree(g), e) for g, e in facs))
        return FactorPattern(p, parts), lc, facs
    parts = tuple(sorted(gfp.factor_degrees(f, p)))
    return FactorPattern(p, parts)


def splitting_unramified(a, p):
    """Residue degrees at an unramified prime, from the mod-p factor degrees.

    Returns a list of (f_i, e_i) pairs with all e_i = 1.  Raises if p is
    ramified in Z[x]/(a) (non-squarefree reduction), which must be routed to
    the maximal-order machinery instead.
    """
    f = a.mod_small(p)
    if not f or gfp.degree(f) != a.degree:
        raise ValueError(f"{p} divides the leading coefficient of the input")
    if not gfp.is_squarefree(f, p):
        raise ValueError(f"{p} is ramified in the equation order; "
                         "use the maximal-order splitting instead")
    pattern = factor_mod_p(a, p)
    return sorted((d, 1) for d, m in pattern.parts for _ in range(m))


def _subset_sums_mask(parts, total):
    """Bitmask of achievable degree sums from (degree, multiplicity) parts."""
    mask = 1
    bound = (1 << (total + 1)) - 1
    for d, m in parts:
        for _ in range(m):
            mask |= mask << d
            mask &= bound
    return mask


@dataclass
class IrredCertificate:
    status: str                     # "certified" or "inconclusive"
    witness_primes: list
    degree_mask: int                # bitmask of surviving proper-factor degrees
    degree: int
    skipped: list = dc_field(default_factory=list)

    def remaining_degrees(self):
        return [d for d in range(self.degree + 1)
                if (self.degree_mask >> d) & 1]


def irreducibility_certificate(a, prime_bound=200):
    """Degree-set sieve for irreducibility over Q.

    For each good prime (not dividing the leading coefficient, squarefree
    reduction), intersect the subset-sum set of the mod-p factor degrees.
    Certified when only {0, deg a} survives; inconclusive is a valid outcome
    (and the certain outcome for reducible input).
    """
    n = a.degree
    full_mask = (1 << (n + 1)) - 1
    mask = full_mask
    witnesses = []
    skipped = []
    target = (1 << n) | 1
    p = 2
    while p <= prime_bound:
        if gfp.degree(a.mod_small(p)) == n:
            fbar = a.mod_small(p)
            if gfp.is_squarefree(fbar, p):
                pattern = factor_mod_p(a, p)
                pm = _subset_sums_mask(pattern.parts, n)
                new_mask = mask & pm
                if new_mask != mask:
                    mask = new_mask
                witnesses.append(p)
                if mask == target:
                    break
            else:
                skipped.append((p, "ramified"))
        else:
            skipped.append((p, "leading coefficient drop"))
        p = _next_prime(p)
    status = "certified" if mask == target else "inconclusive"
    return IrredCertificate(status, witnesses, mask, n, skipped)


def _next_prime(p):
    candidate = p + 1
    while True:
        if candidate < 2:
            candidate = 2
        is_p = True
        d = 2
        while d * d <= candidate:
            if candidate % d == 0:
                is_p = False
                break
            d += 1
        if is_p:
            return candidate
        candidate += 1


def primes_up_to(bound):
    out = []
    p = 2
    while p <= bound:
        out.append(p)
        p = _next_prime(p)
    return out


# ---------------------------------------------------------------------------
# pair resolvent: roots s*alpha + t*beta over ordered pairs alpha != beta

class ResolventSkip(Exception):
    """Raised when a prime cannot be used for the resolvent pattern."""


def _roots_in_extension(fbar, p, max_edf_degree=30):
    """All roots of the squarefree fbar in an explicit splitting field.

    The factor degrees of an element-induced pattern share their lcm with the
    largest factor, so the splitting field is F_p[y]/(f_max) whenever some
    factor has degree lcm(all degrees); otherwise a generic modulus of degree
    lcm is used.  Returns (field, roots) with roots as FqElement values.
    Raises ResolventSkip when the equal-degree root search would exceed the
    cost cap (max_edf_degree bounds the degree of any factor needing it).
    """
    lc, facs = gfp.factor(fbar, p)
    degs = [gfp.degree(g) for g, _ in facs]
    lcm = 1
    for d in degs:
        lcm = lcm * d // _gcd(lcm, d)
    host = None
    for g, _ in facs:
        if gfp.degree(g) == lcm:
            host = g
            break
    if host is not None:
        field = make_field(p, lcm, host) if lcm > 1 else make_field(p, 1)
        free_root = field.gen() if lcm > 1 else field.from_int((-host[0]) % p)
    else:
        if lcm > max_edf_degree:
            raise ResolventSkip(
                f"splitting field degree {lcm} with no matching factor "
                f"exceeds the root-search cap")
        field = make_field(p, lcm)
        free_root = None
    for g, _ in facs:
        if gfp.degree(g) > max_edf_degree and list(g) != (host or []):
            raise ResolventSkip(
                f"factor of degree {gfp.degree(g)} exceeds the root-search cap")
    roots = []
    for g, mult in facs:
        if mult != 1:
            raise ResolventSkip("input not squarefree mod p")
        d = gfp.degree(g)
        if d == 1:
            r = field.from_int((-g[0]) % p)
        elif host is not None and g == host:
            r = free_root
        else:
            r = _one_root_in_field(g, field)
        orbit = [r]
        for _ in range(d - 1):
            orbit.append(orbit[-1] ** p)
        assert orbit[0] == orbit[-1] ** p, "Frobenius orbit did not close"
        roots.extend(orbit)
    return field, roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _one_root_in_field(g, field):
    """One root of the irreducible g (over F_p) inside F_(p^m), deg g | m.

    Cantor-Zassenhaus style splitting of g over the big field, recursing
    until a linear factor appears.  Deterministic seeding.
    """
    import random as _random
    p = field.p
    q = field.q
    # polynomial arithmetic over the field: dense lists of FqElement
    zero, one = field.zero(), field.one()

    def trimf(f):
        while f and f[-1].is_zero:
            f.pop()
        return f

    def mulf(f, g2):
        out = [zero] * (len(f) + len(g2) - 1)
        for i, a in enumerate(f):
            if not a.is_zero:
                for j, b in enumerate(g2):
                    out[i + j] = out[i + j] + a * b
        return trimf(out)

    def remf(f, g2):
        r = list(f)
        dg = len(g2) - 1
        inv = g2[-1].inverse()
        while len(r) - 1 >= dg and r:
            c = r[-1] * inv
            k = len(r) - 1 - dg
            for i, b in enumerate(g2):
                r[k + i] = r[k + i] - c * b
            trimf(r)
        return r

    def gcdf(f, g2):
        a, b = list(f), list(g2)
        while b:
            a, b = b, remf(a, b)
        if a:
            inv = a[-1].inverse()
            a = [c * inv for c in a]
        return a

    def powmodf(f, n, mod):
        result = [one]
        base = remf(f, mod)
        while n:
            if n & 1:
                result = remf(mulf(result, base), mod)
            base = remf(mulf(base, base), mod)
            n >>= 1
        return result

    cur = [field.from_int(c) for c in g]
    rng = _random.Random((field.p, field.k, tuple(g)).__hash__())
    while len(cur) - 1 > 1:
        deg = len(cur) - 1
        r = [field.element([rng.randrange(p) for _ in range(field.k)])
             for _ in range(deg)]
        r = trimf(r)
        if len(r) < 1:
            continue
        if p == 2:
            # value at each root is the F_2-trace of r(root), splitting the
            # roots of cur by trace: acc = r + r^2 + ... + r^(2^(k-1))
            acc = list(r)
            t = list(r)
            for _ in range(field.k - 1):
                t = remf(mulf(t, t), cur)
                pad = max(len(acc), len(t))
                acc = trimf([(acc[i] if i < len(acc) else zero)
                             + (t[i] if i < len(t) else zero)
                             for i in range(pad)])
            h = gcdf(acc, cur) if acc else []
        else:
            e = (q - 1) // 2
            w = powmodf(r, e, cur)
            w0 = list(w)
            w0[0:1] = [w0[0] - one] if w0 else [-one]
            h = gcdf(trimf(w0), cur)
        if h and 0 < len(h) - 1 < deg:
            other = _divf(cur, h, field)
            cur = h if len(h) <= len(other) else other
    return -cur[0] / cur[1]


def _divf(f, g, field):
    """Exact quotient f / g over the field (remainder must vanish)."""
    zero = field.zero()
    r = list(f)
    dg = len(g) - 1
    inv = g[-1].inverse()
    q = [zero] * (len(f) - dg)
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv
        k = len(r) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = r[k + i] - c * b
        while r and r[-1].is_zero:
            r.pop()
    assert not r, "division not exact"
    return q


def pair_resolvent_mod_p(a, s, t, p, route="roots", max_edf_degree=30):
    """Factor pattern of the ordered-distinct-pair resolvent mod p.

    The resolvent has degree n(n-1) with roots s*alpha + t*beta over ordered
    pairs of distinct roots of a; the diagonal contribution (roots
    (s+t)*alpha) is excluded.  Two routes:

    - "roots": find all roots of a mod p in an explicit splitting field,
      form the n(n-1) values and read the pattern off their Frobenius
      orbits.  Handles repeated values exactly (they appear as genuine
      multiplicities in the pattern).
    - "resultant": compute Res_y(a(y), t^n a((x - s y)/t)) in F_p[x] by the
      fraction-free subresultant sequence and divide out the diagonal
      factor; only sensible for small degrees.

    Raises ResolventSkip for unusable primes (non-squarefree reduction,
    leading coefficient drop, or root search over the cost cap).
    """
    n = a.degree
    fbar = a.mod_small(p)
    if gfp.degree(fbar) != n:
        raise ResolventSkip("leading coefficient vanishes mod p")
    if s % p == 0 or t % p == 0:
        raise ResolventSkip("weight s or t vanishes mod p")
    if not gfp.is_squarefree(fbar, p):
        raise ResolventSkip("input not squarefree mod p")
    if route == "resultant":
        return _pair_resolvent_resultant(a, s, t, p)
    field, roots = _roots_in_extension(gfp.monic(fbar, p), p, max_edf_degree)
    svals = {}
    for i, alpha in enumerate(roots):
        for j, beta in enumerate(roots):
            if i == j:
                continue
            v = s * alpha + t * beta
            svals[v.coords] = svals.get(v.coords, 0) + 1
    # Frobenius orbits of the distinct values give the irreducible factors;
    # a value seen with multiplicity mu contributes its minimal polynomial mu
    # times (every conjugate is hit with the same multiplicity).
    pattern = {}
    seen = set()
    collisions = 0
    for coords, mu in svals.items():
        if coords in seen:
            continue
        orbit = [coords]
        seen.add(coords)
        cur = field.element(list(coords))
        while True:
            cur = cur ** p
            if cur.coords == coords:
                break
            orbit.append(cur.coords)
            seen.add(cur.coords)
        key = (len(orbit), mu)
        pattern[key] = pattern.get(key, 0) + 1
        if mu > 1:
            collisions += 1
    parts = []
    for (d, m), count in sorted(pattern.items()):
        parts.extend([(d, m)] * count)
    result = FactorPattern(p, tuple(sorted(parts)))
    assert result.total_degree == n * (n - 1), "pair resolvent degree mismatch"
    return result


def _pair_resolvent_resultant(a, s, t, p):
    """Reference route via a bivariate resultant, for small inputs."""
    n = a.degree
    fbar = gfp.monic(a.mod_small(p), p)
    # g(x, y) = t^n * a((x - s*y)/t) as a polynomial in y with F_p[x] coeffs
    # a((x - s y)/t) * t^n = sum a_i (x - s y)^i t^(n-i)
    # coefficient of y^j: sum_i a_i * C(i, j) * (-s)^j * x^(i-j) * t^(n-i)
    from math import comb
    coeffs_y = []
    for j in range(n + 1):
        cx = [0] * (n - j + 1)
        for i in range(j, n + 1):
            ai = fbar[i] if i < len(fbar) else 0
            if ai:
                val = ai * comb(i, j) * pow(-s, j, p) * pow(t, n - i, p)
                cx[i - j] = (cx[i - j] + val) % p
        coeffs_y.append(gfp.trim(cx))
    # resultant in y of fbar(y) (coefficients constant in x) and coeffs_y
    f_y = [[c] if c else [] for c in fbar]
    r_all = _resultant_bivariate(f_y, coeffs_y, p)
    # divide out the diagonal: monic polynomial with roots (s+t)*alpha
    c = (s + t) % p
    if c == 0:
        diag = [0] * n + [1]
    else:
        # monic polynomial with roots (s+t)*alpha: coefficients a_i c^(n-i)
        diag = [fbar[i] * pow(c, n - i, p) % p for i in range(n + 1)]
    q, r = gfp.divmod_poly(gfp.monic(r_all, p), diag, p)
    if r:
        raise ResolventSkip("diagonal factor does not divide the resolvent")
    parts = tuple(sorted(gfp.factor_degrees(q, p)))
    result = FactorPattern(p, parts)
    assert result.total_degree == n * (n - 1)
    return result


def _resultant_bivariate(f, g, p):
    """Resultant in y of two polynomials in (F_p[x])[y].

    f, g are lists over y whose entries are F_p[x] coefficient lists.
    Fraction-free primitive PRS; fine for small degrees.
    """
    def content(h):
        c = []
        for cx in h:
            c = gfp.gcd(c, cx, p) if c else list(cx)
        return c if c else []

    def divide_content(h, c):
        if not c or gfp.degree(c) < 1 and c == [1]:
            return h
        return [gfp.divmod_poly(cx, c, p)[0] if cx else [] for cx in h]

    def trim_y(h):
        while h and not h[-1]:
            h.pop()
        return h

    def scale(h, cx):
        return [gfp.mul(e, cx, p) for e in h]

    def sub_shift(h, cx, k, g2):
        # h - cx * y^k * g2
        out = [list(e) for e in h]
        for i, e in enumerate(g2):
            if e:
                term = gfp.mul(cx, e, p)
                idx = i + k
                while len(out) <= idx:
                    out.append([])
                out[idx] = gfp.sub(out[idx], term, p)
        return trim_y(out)

    A = trim_y([list(e) for e in f])
    B = trim_y([list(e) for e in g])
    if not A or not B:
        raise ValueError("zero polynomial in bivariate resultant")
    acc_num = [1]
    acc_den = [1]
    sign = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2 == 1:
            sign = -sign
        A, B = B, A
    while len(B) - 1 > 0:
        m, nn = len(A) - 1, len(B) - 1
        # pseudo-remainder in y
        R = [list(e) for e in A]
        lead_b = B[-1]
        steps = 0
        while len(R) - 1 >= nn and R:
            k = len(R) - 1 - nn
            lead_r = R[-1]
            R = scale(R, lead_b)
            R = sub_shift(R, lead_r, k, B)
            steps += 1
            trim_y(R)
        if not R:
            return []
        cont = content(R)
        Rp = divide_content(R, cont)
        # res(A,B) = (-1)^(mn) lc(B)^(m - deg R - n*steps) cont^n res(B, Rp)
        e = m - (len(R) - 1) - nn * steps
        if e >= 0:
            acc_num = gfp.mul(acc_num, gfp.powmod_plain(lead_b, e, p), p)
        else:
            acc_den = gfp.mul(acc_den, gfp.powmod_plain(lead_b, -e, p), p)
        acc_num = gfp.mul(acc_num, gfp.powmod_plain(cont, nn, p), p)
        if (m * nn) % 2 == 1:
            sign = -sign
        A, B = B, Rp
    const = B[0]
    acc_num = gfp.mul(acc_num, gfp.powmod_plain(const, len(A) - 1, p), p)
    q, r = gfp.divmod_poly(acc_num, acc_den, p)
    if r:
        raise ArithmeticError("bivariate resultant bookkeeping failed")
    return q if sign == 1 else gfp.neg(q, p)


def pick_weights(a, prime_bound=500, start=(1, 2)):
    """Choose resolvent weights (s, t): the default unless a collision-free
    verification prime cannot be found, in which case bump t."""
    s, t = start
    for _ in range(6):
        for p in primes_up_to(prime_bound):
            try:
                pattern = pair_resolvent_mod_p(a, s, t, p)
            except ResolventSkip:
                continue
            if all(m == 1 for _, m in pattern.parts):
                # squarefree resolvent mod p certifies distinct roots over Q
                return s, t, p
        t += 1
    raise RuntimeError("no collision-free weights found")


@dataclass
class TransitivityReport:
    status: str          # "certified", "evidence", "failed"
    weights: tuple
    witness_primes: list
    skipped: list
    degree_mask: int
    resolvent_degree: int
    evidence_count: int
    reason: str = ""

    def remaining_degrees(self):
        return [d for d in range(self.resolvent_degree + 1)
                if (self.degree_mask >> d) & 1]


def double_transitivity_certificate(a, s=1, t=2, prime_bound=500,
                                    require_irreducible=True):
    """Degree-set sieve on the pair resolvent.

    Certified when the subset-sum intersection collapses to {0, n(n-1)}:
    the resolvent is then irreducible over Q, which holds exactly when the
    Galois group of a is doubly transitive.  Otherwise the report carries
    the evidence strength (number of primes whose pattern was folded into
    the still-open intersection); "failed" means the transitivity
    prerequisite (irreducibility of a itself) was not certified.
    """
    if require_irreducible:
        base = irreducibility_certificate(a, prime_bound=min(prime_bound, 200))
        if base.status != "certified":
            return TransitivityReport(
                "failed", (s, t), [], [], 0, a.degree * (a.degree - 1), 0,
                reason="transitivity prerequisite not certified")
    n = a.degree
    big_n = n * (n - 1)
    target = (1 << big_n) | 1
    mask = (1 << (big_n + 1)) - 1
    witnesses = []
    skipped = []
    evidence = 0
    for p in primes_up_to(prime_bound):
        try:
            pattern = pair_resolvent_mod_p(a, s, t, p)
        except ResolventSkip as exc:
            skipped.append((p, str(exc)))
            continue
        mask &= _subset_sums_mask(pattern.parts, big_n)
        witnesses.append(p)
        evidence += 1
        if mask == target:
            break
    status = "certified" if mask == target else "evidence"
    return TransitivityReport(status, (s, t), witnesses, skipped, mask,
                              big_n, evidence)
