"""Exact coefficient tower for the curve computations.

Three layers, all immutable and exact:

  LaurentPoly  multivariate Laurent polynomial over Fraction in the fixed
               symbol set ``SYMBOLS``
  RatFun       normalized quotient of Laurent polynomials whose denominator
               involves at most one symbol
  XSeries      power series in a formal variable x, truncated at a fixed
               order, with RatFun coefficients

Symbol semantics (half-weights keep every exponent integral):

  E    e^(lam/2), so e^(n*lam) = E^(2n)
  Qh   e^(-t/2),  so e^(-t)   = Qh^2
  lam  the expansion variable of the generating functions
  u    q^(1/2),   so the quantum integer [n] = u^n - u^(-n)

Canonical RatFun form: the denominator is monic in its single symbol, has
no negative exponents and a nonzero constant term (monomial content is
pushed into the numerator), and shares no nontrivial univariate factor
with the numerator.  Equal values therefore compare equal structurally.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from math import lcm as _int_lcm

SYMBOLS = ("E", "Qh", "lam", "u")
_NSYM = len(SYMBOLS)
_SYM_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
_ZERO_MONO = (0,) * _NSYM

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ZeroDenominatorError(ZeroDivisionError):
    """Denominator of a rational function is the zero polynomial."""


class MultivariateDenominatorError(ValueError):
    """Denominator involves more than one symbol after content extraction."""


class MultivariateInputError(ValueError):
    """A univariate-only operation received a multivariate polynomial."""


class OrderMismatchError(ValueError):
    """Series operand is not truncated at a sufficient order."""


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


def _mono_key(powers: dict[str, int]) -> tuple[int, ...]:
    exps = [0] * _NSYM
    for name, e in powers.items():
        exps[_SYM_INDEX[name]] = e
    return tuple(exps)


def _mono_str(mono: tuple[int, ...]) -> str:
    return "*".join(
        f"{SYMBOLS[i]}^{e}" for i, e in enumerate(mono) if e != 0
    )


class LaurentPoly:
    """Laurent polynomial in the fixed symbols, exact Fraction coefficients.

    Terms map exponent vectors (ordered as ``SYMBOLS``) to nonzero
    coefficients.  Instances are value objects: hashable, comparable,
    never mutated after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, ...], Fraction] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = _coerce(c)
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> LaurentPoly:
        return _LP_ZERO

    @classmethod
    def one(cls) -> LaurentPoly:
        return _LP_ONE

    @classmethod
    def scalar(cls, c) -> LaurentPoly:
        return cls({_ZERO_MONO: _coerce(c)})

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> LaurentPoly:
        return cls({_mono_key({name: power}): _ONE})

    @classmethod
    def term(cls, coeff, **powers: int) -> LaurentPoly:
        """Single term, e.g. ``LaurentPoly.term(-1, E=2, lam=-1)``."""
        return cls({_mono_key(powers): _coerce(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_ZERO_MONO: _ONE}

    def as_scalar(self) -> Fraction | None:
        """The value as a plain Fraction, or None if any symbol appears."""
        if not self.terms:
            return _ZERO
        if len(self.terms) == 1 and _ZERO_MONO in self.terms:
            return self.terms[_ZERO_MONO]
        return None

    def symbols_used(self) -> tuple[int, ...]:
        """Indices of symbols occurring with nonzero exponent."""
        used = [False] * _NSYM
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used[i] = True
        return tuple(i for i in range(_NSYM) if used[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, _ZERO) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    def __neg__(self) -> LaurentPoly:
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return _LP_ZERO
            res = LaurentPoly.__new__(LaurentPoly)
            res.terms = {m: v * c for m, v in self.terms.items()}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return _LP_ZERO
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], Fraction] = {}
        for ma, ca in a.items():
            e0, e1, e2, e3 = ma
            for mb, cb in b.items():
                key = (e0 + mb[0], e1 + mb[1], e2 + mb[2], e3 + mb[3])
                s = out.get(key, _ZERO) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers only via mul_term on monomials")
        res = _LP_ONE
        base = self
        while n:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def mul_term(self, coeff, **powers: int) -> LaurentPoly:
        """Multiply by a single (possibly Laurent) term; stays canonical."""
        c = _coerce(coeff)
        if not c or not self.terms:
            return _LP_ZERO
        shift = _mono_key(powers)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {
            (m[0] + shift[0], m[1] + shift[1], m[2] + shift[2], m[3] + shift[3]): v * c
            for m, v in self.terms.items()
        }
        return res

    def diff(self, name: str) -> LaurentPoly:
        """Formal derivative with respect to one symbol (Laurent rule)."""
        i = _SYM_INDEX[name]
        out: dict[tuple[int, ...], Fraction] = {}
        for mono, c in self.terms.items():
            e = mono[i]
            if e == 0:
                continue
            key = mono[:i] + (e - 1,) + mono[i + 1:]
            s = out.get(key, _ZERO) + c * e
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    def subs_symbol_power(self, src: str, dst: str, k: int) -> LaurentPoly:
        """Replace src^e by dst^(k*e) in every term."""
        si, di = _SYM_INDEX[src], _SYM_INDEX[dst]
        out: dict[tuple[int, ...], Fraction] = {}
        for mono, c in self.terms.items():
            e = mono[si]
            exps = list(mono)
            exps[si] = 0
            exps[di] += k * e
            key = tuple(exps)
            s = out.get(key, _ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    def truncate_symbol(self, name: str, max_power: int) -> LaurentPoly:
        """Drop terms whose exponent in ``name`` exceeds ``max_power``."""
        i = _SYM_INDEX[name]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {m: c for m, c in self.terms.items() if m[i] <= max_power}
        return res

    def coefficient_of(self, name: str, power: int) -> LaurentPoly:
        """Coefficient of name^power, as a polynomial in the other symbols."""
        i = _SYM_INDEX[name]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {
            m[:i] + (0,) + m[i + 1:]: c
            for m, c in self.terms.items()
            if m[i] == power
        }
        return res

    def max_power(self, name: str) -> int:
        """Largest exponent of ``name``; 0 for the zero polynomial."""
        i = _SYM_INDEX[name]
        return max((m[i] for m in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical order: (total degree, exponent vector)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            ms = _mono_str(mono)
            parts.append(f"({c})*{ms}" if ms else str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly<{self}>"

    def to_json_terms(self) -> list[dict]:
        return [
            {
                "coeff": str(c),
                "mono": {SYMBOLS[i]: e for i, e in enumerate(mono) if e},
            }
            for mono, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_terms(cls, terms: list[dict]) -> LaurentPoly:
        return cls(
            {
                _mono_key(t.get("mono", {})): Fraction(t["coeff"])
                for t in terms
            }
        )


_LP_ZERO = LaurentPoly()
_LP_ONE = LaurentPoly({_ZERO_MONO: _ONE})


# ---------------------------------------------------------------------------
# dense univariate helpers (ascending coefficient lists)
# ---------------------------------------------------------------------------

def _dense_strip(cs: list) -> None:
    while cs and not cs[-1]:
        cs.pop()


def _to_dense(p: LaurentPoly, sidx: int) -> tuple[int, list[Fraction]]:
    """(min exponent, ascending coefficients) of a poly univariate in sidx."""
    if not p.terms:
        return 0, []
    exps = {m[sidx]: c for m, c in p.terms.items()}
    if len(exps) != len(p.terms):
        raise MultivariateInputError(f"not univariate in {SYMBOLS[sidx]}: {p}")
    lo, hi = min(exps), max(exps)
    cs = [_ZERO] * (hi - lo + 1)
    for e, c in exps.items():
        cs[e - lo] = c
    return lo, cs


def _from_dense(cs: list[Fraction], sidx: int, shift: int = 0) -> LaurentPoly:
    terms = {}
    for k, c in enumerate(cs):
        if c:
            mono = [0] * _NSYM
            mono[sidx] = k + shift
            terms[tuple(mono)] = c
    return LaurentPoly(terms)


def _dense_primitive_int(cs: list[Fraction]) -> list[int]:
    """Primitive integer multiple of a rational coefficient list."""
    den = 1
    for c in cs:
        den = _int_lcm(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for v in ints:
        g = _int_gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _dense_prem_int(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of integer dense polys (sign/scale irrelevant)."""
    r = f[:]
    dg = len(g) - 1
    lg = g[-1]
    while len(r) - 1 >= dg and r:
        top = r[-1]
        shift = len(r) - 1 - dg
        r = [lg * c for c in r]
        for i in range(dg + 1):
            r[shift + i] -= top * g[i]
        r.pop()
        _dense_strip(r)
    return r


def _dense_gcd_int(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd via the primitive pseudo-remainder sequence."""
    f, g = f[:], g[:]
    _dense_strip(f)
    _dense_strip(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _dense_prem_int(f, g)
        ig = 0
        for v in r:
            ig = _int_gcd(ig, v)
            if ig == 1:
                break
        if ig > 1:
            r = [v // ig for v in r]
        f, g = g, r
    if f and f[-1] < 0:
        f = [-v for v in f]
    return f


def _dense_divexact(f: list[Fraction], g: list[int]) -> list[Fraction] | None:
    """f / g (ascending dense), or None when the division is not exact."""
    if not f:
        return []
    if len(f) < len(g):
        return None
    dg = len(g) - 1
    lg = Fraction(g[-1])
    q = [_ZERO] * (len(f) - dg)
    r = f[:]
    for k in range(len(f) - dg - 1, -1, -1):
        c = r[dg + k] / lg
        if c:
            q[k] = c
            for i in range(dg + 1):
                r[i + k] -= c * g[i]
    if any(r[:dg]):
        return None
    return q


def _content_gcd(slices: list[list[Fraction]]) -> list[int]:
    """gcd (primitive integer form) of a family of dense rational polys."""
    g: list[int] = []
    for cs in slices:
        gi = _dense_primitive_int(cs)
        g = gi if not g else _dense_gcd_int(g, gi)
        if len(g) == 1:
            break
    return g


def _extract_monomial(p: LaurentPoly) -> tuple[tuple[int, ...], LaurentPoly]:
    """Factor p = mono * core with core having min exponent 0 per symbol."""
    if not p.terms:
        return _ZERO_MONO, p
    mins = [None] * _NSYM
    for mono in p.terms:
        for i, e in enumerate(mono):
            if mins[i] is None or e < mins[i]:
                mins[i] = e
    shift = tuple(m if m else 0 for m in mins)
    if shift == _ZERO_MONO:
        return _ZERO_MONO, p
    core = LaurentPoly.__new__(LaurentPoly)
    core.terms = {
        tuple(e - s for e, s in zip(m, shift)): c for m, c in p.terms.items()
    }
    return shift, core


def _slices_by_others(p: LaurentPoly, sidx: int) -> list[list[Fraction]]:
    """Dense views in symbol sidx, one per monomial in the other symbols.

    Each slice is shifted to minimum exponent 0; the dropped unit factor
    cannot affect divisibility by polynomials with nonzero constant term.
    """
    groups: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for mono, c in p.terms.items():
        key = mono[:sidx] + (0,) + mono[sidx + 1:]
        groups.setdefault(key, {})[mono[sidx]] = c
    out = []
    for exps in groups.values():
        lo, hi = min(exps), max(exps)
        cs = [_ZERO] * (hi - lo + 1)
        for e, c in exps.items():
            cs[e - lo] = c
        out.append(cs)
    return out


def _divexact_poly(p: LaurentPoly, g_dense: list[int], sidx: int) -> LaurentPoly:
    """Divide p by a univariate (in sidx) integer poly; must be exact."""
    groups: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for mono, c in p.terms.items():
        key = mono[:sidx] + (0,) + mono[sidx + 1:]
        groups.setdefault(key, {})[mono[sidx]] = c
    terms: dict[tuple[int, ...], Fraction] = {}
    for key, exps in groups.items():
        lo, hi = min(exps), max(exps)
        cs = [_ZERO] * (hi - lo + 1)
        for e, c in exps.items():
            cs[e - lo] = c
        q = _dense_divexact(cs, g_dense)
        if q is None:
            raise ArithmeticError("inexact division in rational normalization")
        for k, c in enumerate(q):
            if c:
                terms[key[:sidx] + (k + lo,) + key[sidx + 1:]] = c
    res = LaurentPoly.__new__(LaurentPoly)
    res.terms = terms
    return res


def gcd_univariate(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two univariate Laurent polynomials.

    Monomial content (a unit in the Laurent ring) is discarded first, so
    the result is an honest polynomial with nonzero constant term, monic
    in its symbol.  gcd(a, 0) is the monic normalization of a.
    """
    if a.is_zero() and b.is_zero():
        return _LP_ZERO
    polys = []
    sidx = None
    for p in (a, b):
        if p.is_zero():
            continue
        _, core = _extract_monomial(p)
        used = core.symbols_used()
        if len(used) > 1:
            raise MultivariateInputError(f"not univariate: {p}")
        if used:
            if sidx is None:
                sidx = used[0]
            elif sidx != used[0]:
                raise MultivariateInputError(
                    f"mixed symbols {SYMBOLS[sidx]} and {SYMBOLS[used[0]]}"
                )
        polys.append(core)
    if sidx is None:
        return _LP_ONE
    denses = []
    for core in polys:
        _, cs = _to_dense(core, sidx)
        if len(cs) == 1:
            return _LP_ONE
        denses.append(_dense_primitive_int(cs))
    g = denses[0] if len(denses) == 1 else _dense_gcd_int(*denses)
    lead = Fraction(g[-1])
    return _from_dense([c / lead for c in g], sidx)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFun:
    """Quotient of Laurent polynomials with a univariate denominator.

    Always held in canonical form (see module docstring), so ``==`` is
    plain structural comparison and zero-ness is ``num == 0``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = _LP_ONE
        n, d = _normalize_ratfun(num, den)
        self.num = n
        self.den = d

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RatFun:
        """Wrap already-canonical parts without re-normalizing."""
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def zero(cls) -> RatFun:
        return _RF_ZERO

    @classmethod
    def one(cls) -> RatFun:
        return _RF_ONE

    @classmethod
    def from_scalar(cls, c) -> RatFun:
        c = _coerce(c)
        if not c:
            return _RF_ZERO
        return cls._raw(LaurentPoly.scalar(c), _LP_ONE)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> RatFun:
        return cls._raw(p, _LP_ONE)

    @classmethod
    def term(cls, coeff, **powers: int) -> RatFun:
        c = _coerce(coeff)
        if not c:
            return _RF_ZERO
        return cls._raw(LaurentPoly.term(c, **powers), _LP_ONE)

    def is_zero(self) -> bool:
        return not self.num.terms

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def equals_cross(self, other: RatFun) -> bool:
        """Equality by cross-multiplication (independent of canonical form)."""
        return (self.num * other.den) == (other.num * self.den)

    def __neg__(self) -> RatFun:
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other: RatFun) -> RatFun:
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1 == d2:
            return RatFun(self.num + other.num, d1)
        if d1.is_one():
            return RatFun(self.num * d2 + other.num, d2)
        if d2.is_one():
            return RatFun(self.num + other.num * d1, d1)
        s1 = d1.symbols_used()
        s2 = d2.symbols_used()
        if s1 == s2:
            sidx = s1[0]
            _, c1 = _to_dense(d1, sidx)
            _, c2 = _to_dense(d2, sidx)
            if len(c2) <= len(c1):
                q = _dense_divexact(c1, c2)
                if q is not None:
                    qp = _from_dense(q, sidx)
                    return RatFun(self.num + other.num * qp, d1)
            else:
                q = _dense_divexact(c2, c1)
                if q is not None:
                    qp = _from_dense(q, sidx)
                    return RatFun(self.num * qp + other.num, d2)
        return RatFun(self.num * d2 + other.num * d1, d1 * d2)

    def __sub__(self, other: RatFun) -> RatFun:
        return self + (-other)

    def __mul__(self, other) -> RatFun:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return _RF_ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFun._raw(self.num * other.num, _LP_ONE)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFun) -> RatFun:
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            raise ValueError("use __truediv__ for inverses")
        res = _RF_ONE
        for _ in range(n):
            res = res * self
        return res

    def scale(self, c) -> RatFun:
        c = _coerce(c)
        if not c:
            return _RF_ZERO
        return RatFun._raw(self.num * c, self.den)

    def mul_term(self, coeff, **powers: int) -> RatFun:
        """Multiply by coeff * monomial; units keep the form canonical."""
        c = _coerce(coeff)
        if not c or self.is_zero():
            return _RF_ZERO
        return RatFun._raw(self.num.mul_term(c, **powers), self.den)

    def diff(self, name: str) -> RatFun:
        if self.den.is_one():
            return RatFun._raw(self.num.diff(name), _LP_ONE)
        n, d = self.num, self.den
        return RatFun(n.diff(name) * d - n * d.diff(name), d * d)

    def subs_symbol_power(self, src: str, dst: str, k: int) -> RatFun:
        """Replace src^e by dst^(k*e) throughout; renormalizes."""
        return RatFun(
            self.num.subs_symbol_power(src, dst, k),
            self.den.subs_symbol_power(src, dst, k),
        )

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFun<{self}>"

    def to_json(self) -> dict:
        return {"num": self.num.to_json_terms(), "den": self.den.to_json_terms()}

    @classmethod
    def from_json(cls, data: dict) -> RatFun:
        return cls(
            LaurentPoly.from_json_terms(data["num"]),
            LaurentPoly.from_json_terms(data["den"]),
        )


def _normalize_ratfun(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDenominatorError("zero denominator")
    if num.is_zero():
        return _LP_ZERO, _LP_ONE
    mono, core = _extract_monomial(den)
    if mono != _ZERO_MONO:
        num = num.mul_term(1, **{SYMBOLS[i]: -e for i, e in enumerate(mono) if e})
    c = core.as_scalar()
    if c is not None:
        return num * (1 / c), _LP_ONE
    used = core.symbols_used()
    if len(used) > 1:
        raise MultivariateDenominatorError(
            f"denominator mixes symbols {[SYMBOLS[i] for i in used]}: {den}"
        )
    sidx = used[0]
    _, den_dense = _to_dense(core, sidx)
    content = _content_gcd(_slices_by_others(num, sidx))
    if len(content) > 1:
        g = _dense_gcd_int(content, _dense_primitive_int(den_dense))
        if len(g) > 1:
            num = _divexact_poly(num, g, sidx)
            q = _dense_divexact(den_dense, g)
            if q is None:
                raise ArithmeticError("gcd does not divide denominator")
            den_dense = q
            if len(den_dense) == 1:
                return num * (1 / den_dense[0]), _LP_ONE
    lead = den_dense[-1]
    if lead != 1:
        inv = 1 / lead
        num = num * inv
        den_dense = [c * inv for c in den_dense]
    return num, _from_dense(den_dense, sidx)


_RF_ZERO = RatFun._raw(_LP_ZERO, _LP_ONE)
_RF_ONE = RatFun._raw(_LP_ONE, _LP_ONE)


# ---------------------------------------------------------------------------
# truncated power series in x
# ---------------------------------------------------------------------------

class XSeries:
    """Power series in x, exact through degree ``order``, then truncated."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        if coeffs is None:
            cs = (_RF_ZERO,) * (order + 1)
        else:
            cs = tuple(coeffs)
            if len(cs) != order + 1:
                raise OrderMismatchError(
                    f"expected {order + 1} coefficients, got {len(cs)}"
                )
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> XSeries:
        return cls(order)

    @classmethod
    def one(cls, order: int) -> XSeries:
        return cls(order, (_RF_ONE,) + (_RF_ZERO,) * order)

    def coeff(self, n: int) -> RatFun:
        if not 0 <= n <= self.order:
            raise OrderMismatchError(f"coefficient {n} beyond order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> XSeries:
        if order > self.order:
            raise OrderMismatchError(
                f"cannot extend order {self.order} to {order}"
            )
        return XSeries(order, self.coeffs[: order + 1])

    def _common_order(self, other: XSeries, order: int | None) -> int:
        n = min(self.order, other.order) if order is None else order
        if n > self.order or n > other.order:
            raise OrderMismatchError(
                f"operands truncated below requested order {n}"
            )
        return n

    def add(self, other: XSeries, order: int | None = None) -> XSeries:
        n = self._common_order(other, order)
        return XSeries(
            n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def mul(self, other: XSeries, order: int | None = None) -> XSeries:
        n = self._common_order(other, order)
        out = [_RF_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return XSeries(n, out)

    def scale(self, f: RatFun) -> XSeries:
        if f.is_zero():
            return XSeries(self.order)
        return XSeries(self.order, [c * f for c in self.coeffs])

    def shift(self, k: int = 1) -> XSeries:
        """Multiply by x^k, truncating at the same order."""
        if k < 0:
            raise ValueError("negative shifts would lose terms")
        cs = (_RF_ZERO,) * k + self.coeffs
        return XSeries(self.order, cs[: self.order + 1])

    def map_coeffs(self, fn) -> XSeries:
        """Apply fn(degree, coefficient) to every coefficient."""
        return XSeries(
            self.order, [fn(n, c) for n, c in enumerate(self.coeffs)]
        )

    def __add__(self, other: XSeries) -> XSeries:
        if not isinstance(other, XSeries):
            return NotImplemented
        if self.order != other.order:
            raise OrderMismatchError(
                f"orders differ: {self.order} vs {other.order}"
            )
        return self.add(other)

    def __sub__(self, other: XSeries) -> XSeries:
        return self + other.scale(RatFun.from_scalar(-1))

    def __mul__(self, other: XSeries) -> XSeries:
        if not isinstance(other, XSeries):
            return NotImplemented
        if self.order != other.order:
            raise OrderMismatchError(
                f"orders differ: {self.order} vs {other.order}"
            )
        return self.mul(other)

    def __str__(self) -> str:
        parts = [
            f"({c})*x^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero()
        ]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"XSeries(order={self.order}, {self})"
