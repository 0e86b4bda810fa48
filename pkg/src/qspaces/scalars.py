"""Exact arithmetic in the coefficient superring.

The ring is  Frac(Q(i)[free params]) tensored with a truncated polynomial
ring in nilpotent parameters (iota^order = 0) and a Grassmann algebra of
odd parameters (h^2 = 0, odd names anticommute).  Every value is kept in a
canonical form: fractions are reduced (coprime numerator/denominator,
monic denominator) and truncated/vanishing terms are dropped, so equality
is plain structural comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DivisionByNonUnit,
    IndeterminateValuation,
    NegativeValuation,
    ParityViolation,
)

EVEN = 0
ODD = 1


class GaussRational:
    """Exact complex rational a + b*i with i^2 = -1."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        if isinstance(other, int):
            other = GaussRational(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        return GaussRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * other.inverse()

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)


@dataclass(frozen=True)
class ParameterSet:
    """Declares the even free, even nilpotent and odd parameter names.

    Declaration order is canonical: it fixes the monomial order of the
    polynomial ring and the normal ordering of odd factors.
    """

    even_free: tuple = ()
    even_nilpotent: tuple = ()  # of (name, truncation_order)
    odd: tuple = ()

    def __post_init__(self):
        names = list(self.even_free) + [n for n, _ in self.even_nilpotent] + list(self.odd)
        if len(set(names)) != len(names):
            raise ValueError("parameter names must be unique across classes")
        if "i" in names:
            raise ValueError("'i' is reserved for the imaginary unit")
        for name, order in self.even_nilpotent:
            if order < 2:
                raise ValueError(f"truncation order of {name!r} must be >= 2")

    @property
    def nil_names(self):
        return tuple(n for n, _ in self.even_nilpotent)

    @property
    def nil_orders(self):
        return tuple(k for _, k in self.even_nilpotent)

    def all_names(self):
        return self.even_free + self.nil_names + self.odd

    def kind_of(self, name):
        if name in self.even_free:
            return "free"
        if name in self.nil_names:
            return "nilpotent"
        if name in self.odd:
            return "odd"
        return None

    def with_extra(self, even_free=(), even_nilpotent=(), odd=()):
        return ParameterSet(
            self.even_free + tuple(even_free),
            self.even_nilpotent + tuple(even_nilpotent),
            self.odd + tuple(odd),
        )


# ---------------------------------------------------------------------------
# multivariate polynomials over Q(i)
# ---------------------------------------------------------------------------

class Poly:
    """Polynomial in the even free parameters; exponent-tuple -> GaussRational."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = c

    @classmethod
    def const(cls, nvars, c):
        if not isinstance(c, GaussRational):
            c = GaussRational(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars, index):
        mono = tuple(1 if j == index else 0 for j in range(nvars))
        return cls(nvars, {mono: GR_ONE})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return all(not any(m) for m in self.terms)

    def const_value(self):
        return self.terms.get((0,) * self.nvars, GR_ZERO)

    def __eq__(self, other):
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, GR_ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, GR_ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(self.nvars, out)

    def scaled(self, c):
        if not c:
            return Poly(self.nvars)
        return Poly(self.nvars, {m: k * c for m, k in self.terms.items()})

    def __pow__(self, n):
        out = Poly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    # deglex with variable 0 most significant
    @staticmethod
    def _mkey(mono):
        return (sum(mono), mono)

    def leading(self):
        mono = max(self.terms, key=Poly._mkey)
        return mono, self.terms[mono]

    def degree_in(self, k):
        return max((m[k] for m in self.terms), default=-1)

    def valuation_in(self, k):
        """Smallest exponent of variable k over all monomials (None if zero)."""
        if self.is_zero():
            return None
        return min(m[k] for m in self.terms)

    def subs_zero(self, k):
        """Set variable k to 0."""
        return Poly(self.nvars, {m: c for m, c in self.terms.items() if m[k] == 0})

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)


def poly_divexact(f, g):
    """Exact quotient f/g; assumes g divides f."""
    if f.is_zero():
        return Poly(f.nvars)
    out = {}
    gm, gc = g.leading()
    rem = f
    while not rem.is_zero():
        fm, fc = rem.leading()
        qm = tuple(a - b for a, b in zip(fm, gm))
        if any(e < 0 for e in qm):
            raise ArithmeticError("poly_divexact: not divisible")
        qc = fc / gc
        out[qm] = out.get(qm, GR_ZERO) + qc
        rem = rem - Poly(f.nvars, {qm: qc}) * g
    return Poly(f.nvars, out)


def _to_univar(p, k):
    """View p as univariate in variable k: degree -> coefficient Poly."""
    coeffs = {}
    for m, c in p.terms.items():
        d = m[k]
        rest = m[:k] + (0,) + m[k + 1:]
        coeffs.setdefault(d, {})[rest] = c
    return {d: Poly(p.nvars, t) for d, t in coeffs.items()}


def _from_univar(coeffs, k):
    nvars = next(iter(coeffs.values())).nvars
    terms = {}
    for d, poly in coeffs.items():
        for m, c in poly.terms.items():
            full = m[:k] + (d,) + m[k + 1:]
            terms[full] = c
    return Poly(nvars, terms)


def _uni_degree(u):
    return max(u, default=-1)


def _prem(a, b, k):
    """Pseudo-remainder of a by b, both univariate views in variable k."""
    da, db = _uni_degree(a), _uni_degree(b)
    lb = b[db]
    r = dict(a)
    while r and _uni_degree(r) >= db:
        dr = _uni_degree(r)
        lr = r[dr]
        new = {}
        for d, c in r.items():
            if d == dr:
                continue
            new[d] = c * lb
        for d, c in b.items():
            if d == db:
                continue
            shift = d + dr - db
            t = new.get(shift, Poly(lr.nvars))
            new[shift] = t - c * lr
        r = {d: c for d, c in new.items() if not c.is_zero()}
    return r


def _content(p, k):
    """GCD of the univariate-in-k coefficients of p."""
    u = _to_univar(p, k)
    g = Poly(p.nvars)
    for coeff in u.values():
        g = poly_gcd(g, coeff)
    return g


def poly_gcd(f, g):
    """Monic multivariate gcd over Q(i) via primitive PRS."""
    if f.is_zero():
        return _monic(g)
    if g.is_zero():
        return _monic(f)
    used = [k for k in range(f.nvars) if f.degree_in(k) > 0 or g.degree_in(k) > 0]
    if not used:
        return Poly.const(f.nvars, 1)
    k = used[-1]
    if f.degree_in(k) == 0 or g.degree_in(k) == 0:
        # one operand is free of k: gcd divides contents
        cf = _content(f, k) if f.degree_in(k) > 0 else f
        cg = _content(g, k) if g.degree_in(k) > 0 else g
        return poly_gcd(cf, cg)
    cf, cg = _content(f, k), _content(g, k)
    c = poly_gcd(cf, cg)
    pf = poly_divexact(f, cf)
    pg = poly_divexact(g, cg)
    a, b = _to_univar(pf, k), _to_univar(pg, k)
    if _uni_degree(a) < _uni_degree(b):
        a, b = b, a
    while b:
        r = _prem(a, b, k)
        a = b
        if r:
            rp = _from_univar(r, k)
            rc = _content(rp, k) if rp.degree_in(k) > 0 else rp
            b = _to_univar(poly_divexact(rp, rc), k)
        else:
            b = {}
    pp = _from_univar(a, k)
    if _uni_degree(_to_univar(pp, k)) == 0:
        pp = Poly.const(f.nvars, 1)
    else:
        ppc = _content(pp, k)
        pp = poly_divexact(pp, ppc)
    return _monic(c * pp)


def _monic(p):
    if p.is_zero():
        return p
    _, lc = p.leading()
    return p.scaled(lc.inverse())


# ---------------------------------------------------------------------------
# reduced fractions of polynomials
# ---------------------------------------------------------------------------

class Frac:
    """Reduced fraction num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den, reduce=True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            if num.is_zero():
                den = Poly.const(num.nvars, 1)
            else:
                g = poly_gcd(num, den)
                if not (g.is_const() and g.const_value() == GR_ONE):
                    num = poly_divexact(num, g)
                    den = poly_divexact(den, g)
                _, lc = den.leading()
                if lc != GR_ONE:
                    inv = lc.inverse()
                    num = num.scaled(inv)
                    den = den.scaled(inv)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, nvars, c):
        return cls(Poly.const(nvars, c), Poly.const(nvars, 1), reduce=False)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return Frac(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return Frac(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        return Frac(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def valuation_in(self, k):
        if self.is_zero():
            return None
        return self.num.valuation_in(k) - self.den.valuation_in(k)

    def __repr__(self):
        return f"Frac({self.num.terms}/{self.den.terms})"


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def _merge_sign(odd1, odd2, index):
    """Koszul sign for concatenating two normally ordered odd tuples.

    Returns 0 when a name repeats (square of an odd parameter vanishes).
    """
    for a in odd1:
        if a in odd2:
            return 0
    inv = 0
    for a in odd1:
        ia = index[a]
        for b in odd2:
            if ia > index[b]:
                inv += 1
    return -1 if inv % 2 else 1


class Scalar:
    """Element of the coefficient superring, in canonical form.

    terms maps (odd_subset, nilpotent_multidegree) to a reduced Frac; the
    odd subset is a tuple in declaration order, the multidegree is aligned
    with the nilpotent declaration and stays below the truncation orders.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params, terms=None):
        self.params = params
        self.terms = {}
        if terms:
            orders = params.nil_orders
            for key, f in terms.items():
                if f.is_zero():
                    continue
                _, nil = key
                if any(e >= orders[j] for j, e in enumerate(nil)):
                    continue
                self.terms[key] = f

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, params):
        return cls(params)

    @classmethod
    def from_gauss(cls, params, c):
        n = len(params.even_free)
        key = ((), (0,) * len(params.even_nilpotent))
        return cls(params, {key: Frac.const(n, c)})

    @classmethod
    def one(cls, params):
        return cls.from_gauss(params, GR_ONE)

    @classmethod
    def integer(cls, params, k):
        return cls.from_gauss(params, GaussRational(k))

    @classmethod
    def rational(cls, params, num, den=1):
        return cls.from_gauss(params, GaussRational(Fraction(num, den)))

    @classmethod
    def imag_unit(cls, params):
        return cls.from_gauss(params, GR_I)

    @classmethod
    def parameter(cls, params, name):
        n = len(params.even_free)
        zeron = (0,) * len(params.even_nilpotent)
        kind = params.kind_of(name)
        if kind == "free":
            poly = Poly.variable(n, params.even_free.index(name))
            return cls(params, {((), zeron): Frac(poly, Poly.const(n, 1), reduce=False)})
        if kind == "nilpotent":
            j = params.nil_names.index(name)
            nil = tuple(1 if jj == j else 0 for jj in range(len(zeron)))
            return cls(params, {((), nil): Frac.const(n, GR_ONE)})
        if kind == "odd":
            return cls(params, {((name,), zeron): Frac.const(n, GR_ONE)})
        raise KeyError(f"unknown parameter {name!r}")

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def body(self):
        """The coefficient of the identity term (no nilpotent/odd factors)."""
        key = ((), (0,) * len(self.params.even_nilpotent))
        return self.terms.get(key, Frac.const(len(self.params.even_free), GR_ZERO))

    def is_unit(self):
        return not self.body().is_zero()

    def parity(self):
        """0, 1, or None for mixed terms."""
        if not self.terms:
            return EVEN
        ps = {len(odd) % 2 for odd, _ in self.terms}
        return ps.pop() if len(ps) == 1 else None

    def even_part(self):
        return Scalar(self.params, {k: f for k, f in self.terms.items() if len(k[0]) % 2 == 0})

    def odd_part(self):
        return Scalar(self.params, {k: f for k, f in self.terms.items() if len(k[0]) % 2 == 1})

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __hash__(self):
        return hash((self.params, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, f in other.terms.items():
            s = out.get(k)
            s = f if s is None else s + f
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return Scalar(self.params, out)

    def __neg__(self):
        return Scalar(self.params, {k: -f for k, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        params = self.params
        orders = params.nil_orders
        index = {n: i for i, n in enumerate(params.odd)}
        out = {}
        for (odd1, nil1), f1 in self.terms.items():
            for (odd2, nil2), f2 in other.terms.items():
                sign = _merge_sign(odd1, odd2, index)
                if sign == 0:
                    continue
                nil = tuple(a + b for a, b in zip(nil1, nil2))
                if any(e >= orders[j] for j, e in enumerate(nil)):
                    continue
                odd = tuple(sorted(odd1 + odd2, key=index.__getitem__))
                f = f1 * f2
                if sign < 0:
                    f = -f
                key = (odd, nil)
                s = out.get(key)
                s = f if s is None else s + f
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return Scalar(params, out)

    def scaled_int(self, k):
        return self * Scalar.integer(self.params, k)

    def nilpotency_bound(self):
        """Smallest K with x^K = 0 for every zero-body scalar x."""
        return 1 + len(self.params.odd) + sum(k - 1 for k in self.params.nil_orders)

    def inverse(self):
        if not self.is_unit():
            raise DivisionByNonUnit("scalar body is zero")
        params = self.params
        b = self.body()
        inv_b = Scalar(params, {((), (0,) * len(params.even_nilpotent)): b.inverse()})
        rest = self - Scalar(params, {((), (0,) * len(params.even_nilpotent)): b})
        if rest.is_zero():
            return inv_b
        x = rest * inv_b  # nilpotent
        out = Scalar.one(params)
        term = Scalar.one(params)
        for _ in range(self.nilpotency_bound() - 1):
            term = -(term * x)
            if term.is_zero():
                break
            out = out + term
        return out * inv_b

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.one(self.params)
        for _ in range(n):
            out = out * self
        return out

    def _check(self, other):
        if self.params != other.params:
            raise ValueError("scalars over different parameter sets")

    # -- substitution and limits -------------------------------------------

    def substitute_params(self, mapping, target=None):
        """Simultaneous substitution name -> Scalar; unmapped names persist.

        Images must respect parity and, for nilpotent names, be nilpotent of
        the declared order; denominators must stay invertible.
        """
        params = self.params
        target = target or params
        images = {}
        for name in params.all_names():
            if name in mapping:
                img = mapping[name]
            else:
                img = Scalar.parameter(target, name)
            if img.params != target:
                raise ValueError(f"image of {name!r} lives in a foreign parameter set")
            kind = params.kind_of(name)
            if kind in ("free", "nilpotent") and img.odd_part().terms:
                raise ParityViolation(f"even parameter {name!r} has an odd image")
            if kind == "odd" and img.even_part().terms:
                raise ParityViolation(f"odd parameter {name!r} has an even image")
            if kind == "nilpotent":
                order = dict(params.even_nilpotent)[name]
                if not (img ** order).is_zero():
                    raise ParityViolation(
                        f"image of nilpotent {name!r} does not satisfy order {order}"
                    )
            images[name] = img
        out = Scalar.zero(target)
        for (odd, nil), f in self.terms.items():
            num = self._eval_poly(f.num, images, target)
            den = self._eval_poly(f.den, images, target)
            if not den.is_unit():
                raise DivisionByNonUnit("substitution makes a denominator non-invertible")
            val = num * den.inverse()
            for j, e in enumerate(nil):
                if e:
                    val = val * (images[params.nil_names[j]] ** e)
            for name in odd:
                val = val * images[name]
            out = out + val
        return out

    def _eval_poly(self, poly, images, target):
        out = Scalar.zero(target)
        for mono, c in poly.terms.items():
            term = Scalar.from_gauss(target, c)
            for k, e in enumerate(mono):
                if e:
                    term = term * (images[self.params.even_free[k]] ** e)
            out = out + term
        return out

    def _valuation(self, name):
        """val(num) - val(den) in the named free parameter; None when zero."""
        k = self.params.even_free.index(name)
        vals = [f.valuation_in(k) for f in self.terms.values()]
        vals = [v for v in vals if v is not None]
        return min(vals) if vals else None

    def eps_valuation(self, name):
        """Valuation in a free parameter; infinity (None) for the zero scalar."""
        if self.params.kind_of(name) != "free":
            raise KeyError(f"{name!r} is not an even free parameter")
        k = self.params.even_free.index(name)
        for f in self.terms.values():
            if f.den.valuation_in(k) > 0:
                raise IndeterminateValuation(
                    f"a denominator vanishes identically at {name}=0"
                )
        return self._valuation(name)

    def limit_at_zero(self, name):
        """The scalar with the named free parameter set to 0."""
        if self.params.kind_of(name) != "free":
            raise KeyError(f"{name!r} is not an even free parameter")
        k = self.params.even_free.index(name)
        out = {}
        for key, f in self.terms.items():
            den0 = f.den.subs_zero(k)
            if den0.is_zero():
                raise NegativeValuation(f"pole at {name}=0")
            num0 = f.num.subs_zero(k)
            g = Frac(num0, den0)
            if g.is_zero():
                continue
            prev = out.get(key)
            out[key] = g if prev is None else prev + g
        return Scalar(self.params, out)

    def divide_by_power(self, name, m):
        """Exact division by name**m (m may be negative)."""
        if m == 0:
            return self
        k = self.params.even_free.index(name)
        n = len(self.params.even_free)
        mono = tuple((abs(m) if j == k else 0) for j in range(n))
        p = Poly(n, {mono: GR_ONE})
        out = {}
        for key, f in self.terms.items():
            out[key] = Frac(f.num * p, f.den) if m < 0 else Frac(f.num, f.den * p)
        return Scalar(self.params, out)

    def uses_param(self, name):
        kind = self.params.kind_of(name)
        if kind == "free":
            k = self.params.even_free.index(name)
            return any(
                f.num.degree_in(k) > 0 or f.den.degree_in(k) > 0
                for f in self.terms.values()
            )
        if kind == "nilpotent":
            j = self.params.nil_names.index(name)
            return any(nil[j] for (_, nil) in self.terms)
        if kind == "odd":
            return any(name in odd for (odd, _) in self.terms)
        return False

    def retag(self, target):
        """Rebuild the scalar over another ParameterSet.

        Every name actually used must exist in the target with the same
        class; unused names may disappear.  Odd factors are renormalized to
        the target declaration order with the Koszul sign.
        """
        src = self.params
        if src == target:
            return self
        n_t = len(target.even_free)
        free_map = {}
        for k, name in enumerate(src.even_free):
            free_map[k] = target.even_free.index(name) if name in target.even_free else None

        def remap_poly(poly):
            terms = {}
            for mono, c in poly.terms.items():
                new = [0] * n_t
                for k, e in enumerate(mono):
                    if not e:
                        continue
                    t = free_map[k]
                    if t is None:
                        raise KeyError(
                            f"parameter {src.even_free[k]!r} missing from target"
                        )
                    new[t] = e
                terms[tuple(new)] = c
            return Poly(n_t, terms)

        out = {}
        for (odd, nil), f in self.terms.items():
            new_nil = [0] * len(target.even_nilpotent)
            dead = False
            for j, e in enumerate(nil):
                if not e:
                    continue
                name = src.nil_names[j]
                if name not in target.nil_names:
                    raise KeyError(f"parameter {name!r} missing from target")
                tj = target.nil_names.index(name)
                if e >= target.nil_orders[tj]:
                    dead = True
                    break
                new_nil[tj] = e
            if dead:
                continue
            for name in odd:
                if name not in target.odd:
                    raise KeyError(f"parameter {name!r} missing from target")
            ranks = [target.odd.index(name) for name in odd]
            inversions = sum(
                1
                for a in range(len(ranks))
                for b in range(a + 1, len(ranks))
                if ranks[a] > ranks[b]
            )
            new_odd = tuple(sorted(odd, key=target.odd.index))
            g = remap_poly(f.num)
            d = remap_poly(f.den)
            frac = Frac(g, d, reduce=False)
            if inversions % 2:
                frac = -frac
            key = (new_odd, tuple(new_nil))
            prev = out.get(key)
            out[key] = frac if prev is None else prev + frac
        return Scalar(target, out)

    def __repr__(self):
        return f"Scalar({self.terms!r})"


def arith(a, b, kind):
    """Spec surface: add/sub/mul/div on scalars."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")
