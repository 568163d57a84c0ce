"""Exact and floating scalar arithmetic behind one commutative-ring surface.

The exact kinds are plain ``int`` (arbitrary precision), ``fractions.Fraction``
(kept reduced with a positive denominator by the stdlib) and :class:`MultiPoly`,
a sparse multivariate polynomial over the integers in variables ``b1..bk``.
``float`` and ``complex`` are the floating kinds; they carry no exactness
guarantees and stay out of the symbolic code paths.

Integer literals act as the zero and one of every kind: ``MultiPoly`` coerces
ints on mixed arithmetic and the stdlib types do so natively, so the generic
matrix and determinant code can use ``0`` and ``1`` directly.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "ExactDivisionError",
    "MultiPoly",
    "exact_div",
    "is_floating",
    "poly_eval",
    "poly_is_zero",
    "poly_mul",
    "scalar_text",
    "variables",
]

_FIELD = 16                # bits per packed exponent field
_EXP_CAP = (1 << 15) - 1   # exponents and total degree must stay below this

_LAYOUTS: dict[int, tuple[int, tuple[int, ...], int]] = {}


class ExactDivisionError(ArithmeticError):
    """An elimination step expected an exact division and found a remainder.

    Signals a broken ring contract (an internal bug), never bad user input.
    """


def _layout(nvars: int) -> tuple[int, tuple[int, ...], int]:
    # Packed key layout, most significant field first: total degree, then
    # e1..ek.  Comparing keys as plain ints is then graded-lex order, and
    # multiplying monomials is key addition (fields are 16 bits wide but
    # values are capped at 15 bits, so a single addition cannot carry).
    try:
        return _LAYOUTS[nvars]
    except KeyError:
        shifts = tuple(_FIELD * (nvars - i) for i in range(1, nvars + 1))
        deg_shift = _FIELD * nvars
        himask = 0x8000 << deg_shift
        for s in shifts:
            himask |= 0x8000 << s
        _LAYOUTS[nvars] = (deg_shift, shifts, himask)
        return _LAYOUTS[nvars]


class MultiPoly:
    """Sparse polynomial in Z[b1..bk] with a canonical graded-lex term order."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms=None):
        if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 0:
            raise ValueError("nvars must be a non-negative integer")
        packed: dict[int, int] = {}
        if terms:
            for exps, coeff in dict(terms).items():
                if not isinstance(coeff, int) or isinstance(coeff, bool):
                    raise TypeError("coefficients must be int")
                if coeff == 0:
                    continue
                packed[_pack(nvars, exps)] = coeff
        self.nvars = nvars
        self._terms = packed

    # -- constructors --------------------------------------------------

    @classmethod
    def _raw(cls, nvars: int, packed: dict[int, int]) -> "MultiPoly":
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = packed
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.const(1, nvars)

    @classmethod
    def const(cls, c: int, nvars: int) -> "MultiPoly":
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError("constant must be int")
        return cls._raw(nvars, {0: c} if c else {})

    @classmethod
    def var(cls, index: int, nvars: int) -> "MultiPoly":
        """The variable b<index>, 1-based."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} outside 1..{nvars}")
        exps = tuple(1 if i == index else 0 for i in range(1, nvars + 1))
        return cls(nvars, {exps: 1})

    # -- basic queries --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        deg_shift = _layout(self.nvars)[0]
        return max(self._terms) >> deg_shift

    def terms(self):
        """Terms as (exponent-tuple, coeff) pairs in descending graded-lex order."""
        unpack = self._unpack
        return [(unpack(k), c) for k, c in sorted(self._terms.items(), reverse=True)]

    def _unpack(self, key: int) -> tuple[int, ...]:
        shifts = _layout(self.nvars)[1]
        return tuple((key >> s) & 0xFFFF for s in shifts)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"mixed variable counts: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return MultiPoly.const(other, self.nvars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly._raw(self.nvars, out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return MultiPoly._raw(self.nvars, {})
        if self.degree() + o.degree() > _EXP_CAP:
            raise OverflowError("product degree exceeds the 15-bit exponent cap")
        a, b = self._terms, o._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        bitems = list(b.items())
        for ka, ca in a.items():
            for kb, cb in bitems:
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._raw(self.nvars, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        result = MultiPoly.one(self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return not self._terms
            return self._terms == {0: other}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- ring operations beyond +,-,* ------------------------------------

    def evaluate(self, values):
        """Substitute ``values`` (ints or Fractions) for b1..bk.

        The floating kinds are deliberately rejected: evaluation is the exact
        specialization map and must stay inside the exact scalars.
        """
        if len(values) != self.nvars:
            raise ValueError(
                f"expected {self.nvars} values, got {len(values)}"
            )
        for v in values:
            if not isinstance(v, (int, Fraction)) or isinstance(v, bool):
                raise TypeError("evaluation points must be int or Fraction")
        acc = 0
        for exps, coeff in self._iter_terms():
            t = coeff
            for v, e in zip(values, exps):
                if e:
                    t *= v ** e
            acc += t
        return acc

    def _iter_terms(self):
        unpack = self._unpack
        for k, c in self._terms.items():
            yield unpack(k), c

    def exact_div(self, other) -> "MultiPoly":
        """Quotient self/other when the division is exact in Z[b1..bk].

        Standard leading-term reduction; when the divisor genuinely divides
        self, every step strips the current leading monomial, so a failed
        step means the exactness contract was violated.
        """
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide MultiPoly by {type(other).__name__}")
        if not o._terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._terms:
            return MultiPoly._raw(self.nvars, {})
        himask = _layout(self.nvars)[2]
        dk = max(o._terms)
        dc = o._terms[dk]
        ditems = list(o._terms.items())
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            rk = max(rem)
            mk = rk - dk
            if mk < 0 or (mk & himask):
                raise ExactDivisionError("leading monomial not divisible")
            qc, r = divmod(rem[rk], dc)
            if r:
                raise ExactDivisionError("leading coefficient not divisible")
            quot[mk] = quot.get(mk, 0) + qc
            for k2, c2 in ditems:
                kk = k2 + mk
                v = rem.get(kk, 0) - qc * c2
                if v:
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        return MultiPoly._raw(self.nvars, quot)

    # -- text form --------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.terms():
            mons = " ".join(
                f"b{i}" if e == 1 else f"b{i}^{e}"
                for i, e in enumerate(exps, start=1)
                if e
            )
            parts.append(f"{coeff} * {mons}" if mons else str(coeff))
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, nvars: int) -> "MultiPoly":
        """Inverse of ``str``: reads ``c * b1^e1 b2^e2 + ...``."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        terms: dict[tuple[int, ...], int] = {}
        for part in s.split(" + "):
            part = part.strip()
            exps = [0] * nvars
            if " * " in part:
                cs, mons = part.split(" * ", 1)
                coeff = _parse_int(cs)
                for mon in mons.split():
                    if not mon.startswith("b"):
                        raise ValueError(f"bad monomial {mon!r}")
                    if "^" in mon:
                        name, es = mon.split("^", 1)
                        e = _parse_int(es)
                    else:
                        name, e = mon, 1
                    idx = _parse_int(name[1:])
                    if not 1 <= idx <= nvars:
                        raise ValueError(
                            f"variable b{idx} outside 1..{nvars}"
                        )
                    exps[idx - 1] += e
            else:
                coeff = _parse_int(part)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return cls(nvars, terms)


def _parse_int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise ValueError(f"bad integer {s.strip()!r} in polynomial text") from None


def _pack(nvars: int, exps) -> int:
    exps = tuple(exps)
    if len(exps) != nvars:
        raise ValueError(f"expected {nvars} exponents, got {len(exps)}")
    deg = 0
    for e in exps:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError("exponents must be non-negative ints")
        deg += e
    if deg > _EXP_CAP:
        raise OverflowError("total degree exceeds the 15-bit exponent cap")
    deg_shift, shifts, _ = _layout(nvars)
    key = deg << deg_shift
    for e, s in zip(exps, shifts):
        key |= e << s
    return key


def variables(nvars: int) -> tuple[MultiPoly, ...]:
    """The generators b1..bk of Z[b1..bk]."""
    return tuple(MultiPoly.var(i, nvars) for i in range(1, nvars + 1))


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_eval(p: MultiPoly, assignment):
    return p.evaluate(assignment)


def poly_is_zero(p: MultiPoly) -> bool:
    return p.is_zero


def is_floating(x) -> bool:
    return isinstance(x, (float, complex))


def exact_div(a, b):
    """Exact ring division a/b, raising ExactDivisionError on a remainder.

    Polynomials use leading-term reduction, integers use divmod, rationals
    and floats use ordinary division (which is exact for a field and merely
    approximate for floats, as expected on the floating paths).
    """
    if isinstance(b, int) and not isinstance(b, bool) and b == 1:
        return a
    if isinstance(a, MultiPoly):
        return a.exact_div(b)
    if isinstance(b, MultiPoly):
        return MultiPoly.const(a, b.nvars).exact_div(b)
    if isinstance(a, (float, complex)) or isinstance(b, (float, complex)):
        return a / b
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        return Fraction(a) / Fraction(b)
    q, r = divmod(a, b)
    if r:
        raise ExactDivisionError(f"{a} is not divisible by {b}")
    return q


def scalar_text(x) -> str:
    """Canonical text form of any scalar, used in reports and hashes."""
    if isinstance(x, MultiPoly):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, complex):
        return repr(x)
    return str(x)
