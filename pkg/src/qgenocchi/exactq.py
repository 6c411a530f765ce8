"""Exact arithmetic in Q[q] and Q(q).

`QPolynomial` is a dense univariate polynomial in the indeterminate q with
exact rational coefficients.  `QRational` is a quotient of two such
polynomials kept in canonical form (gcd-reduced, monic denominator), so
identity checking reduces to structural equality.  `XPolynomial` is a
polynomial in a second indeterminate x whose coefficients are QRational.

Values are immutable; all operations are pure functions, safe to share
across threads.

Internally a QRational is stored as ``c * N / D`` with ``c`` a Fraction and
``N``, ``D`` primitive integer polynomials with positive leading coefficient
and gcd(N, D) = 1; this keeps the hot gcd work (see `_kernel`) in integer
arithmetic.  The public `num`/`den` views present the equivalent canonical
pair with monic denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import _kernel as K
from .errors import PoleError

Rational = Fraction

_GCD_CHECK_PRIMES = (1000003, 999983, 754573)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _gf_gcd_degree(a, b, p):
    """Degree of gcd(a, b) over GF(p); inputs are int lists, consumed."""
    a = K.poly_trim([x % p for x in a])
    b = K.poly_trim([x % p for x in b])
    if len(a) < len(b):
        a, b = b, a
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            d = len(a) - len(b)
            c = a[-1] * inv % p
            for i in range(len(b)):
                a[i + d] = (a[i + d] - c * b[i]) % p
            K.poly_trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _coprime_certificate(a, b) -> bool:
    """True guarantees gcd(a, b) is constant in Q[q] (mod-p certificate).

    False is inconclusive (unlucky prime or an actual common factor); the
    caller then runs the exact Euclidean gcd.
    """
    if not a or not b:
        return False
    for p in _GCD_CHECK_PRIMES:
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        return _gf_gcd_degree(a, b, p) == 0
    return False


def _int_gcd(a, b):
    """Primitive gcd of two primitive integer polynomials, trivial-fast path."""
    if _coprime_certificate(a, b):
        return [1]
    return K.poly_gcd(a, b)


class QPolynomial:
    """Polynomial in q over exact rationals, dense, trailing coefficient nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def _from_ints(cls, scale: Fraction, ints) -> "QPolynomial":
        return cls([scale * c for c in ints])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return QPolynomial()
        ca, pa = self.content_primitive()
        cb, pb = o.content_primitive()
        return QPolynomial._from_ints(ca * cb, K.poly_mul(pa, pb))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = QPolynomial((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("QPolynomial", self.coeffs))

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return _render_poly(self.coeffs, "q", latex=False)

    def evaluate(self, q0) -> Fraction:
        """Exact evaluation at a rational point (Horner)."""
        q0 = Fraction(q0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def content_primitive(self):
        """Split into (rational content, primitive int coefficient list).

        content * primitive == self; primitive has positive leading
        coefficient.  The zero polynomial gives (0, []).
        """
        if not self.coeffs:
            return Fraction(0), []
        L = 1
        for c in self.coeffs:
            L = _lcm(L, c.denominator)
        ints = [int(c * L) for c in self.coeffs]
        g = K.poly_content(ints)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, L), [x // g for x in ints]

    def reversed(self) -> "QPolynomial":
        """Coefficient reversal: q^deg * self(1/q)."""
        return QPolynomial(tuple(reversed(self.coeffs)))

    def shifted(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        if self.is_zero:
            return self
        return QPolynomial((Fraction(0),) * k + self.coeffs)


def q_bracket(m: int) -> QPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1); the zero polynomial for m = 0."""
    if m < 0:
        raise ValueError("q_bracket requires m >= 0")
    return QPolynomial((1,) * m)


class QRational:
    """Rational function in q over Q, in canonical form.

    Canonical form: numerator and denominator coprime in Q[q], denominator
    monic, zero represented as 0/1.  Equality and hashing are structural,
    so two QRational values are equal iff they are the same function.
    """

    __slots__ = ("_c", "_num", "_den")

    def __init__(self, num=0, den=1):
        if isinstance(num, QRational) or isinstance(den, QRational):
            a = num if isinstance(num, QRational) else QRational(num)
            r = a / den if not (isinstance(den, int) and den == 1) else a
            object.__setattr__(self, "_c", r._c)
            object.__setattr__(self, "_num", r._num)
            object.__setattr__(self, "_den", r._den)
            return
        npoly = num if isinstance(num, QPolynomial) else QPolynomial((num,))
        dpoly = den if isinstance(den, QPolynomial) else QPolynomial((den,))
        c, n, d = _canonical_triplet(npoly, dpoly)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_num", n)
        object.__setattr__(self, "_den", d)

    def __setattr__(self, *_):
        raise AttributeError("QRational is immutable")

    @classmethod
    def _raw(cls, c: Fraction, num, den) -> "QRational":
        """Internal: build from parts already in internal canonical form."""
        self = object.__new__(cls)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_num", tuple(num))
        object.__setattr__(self, "_den", tuple(den))
        return self

    @classmethod
    def zero(cls) -> "QRational":
        return cls._raw(Fraction(0), (), (1,))

    @classmethod
    def one(cls) -> "QRational":
        return cls._raw(Fraction(1), (1,), (1,))

    @classmethod
    def q(cls) -> "QRational":
        """The indeterminate q as a rational function."""
        return cls._raw(Fraction(1), (0, 1), (1,))

    # -- canonical views ---------------------------------------------------

    @property
    def num(self) -> QPolynomial:
        """Numerator of the canonical (monic-denominator) form."""
        if self._c == 0:
            return QPolynomial()
        scale = self._c / self._den[-1]
        return QPolynomial._from_ints(scale, self._num)

    @property
    def den(self) -> QPolynomial:
        """Monic denominator of the canonical form."""
        lead = self._den[-1]
        return QPolynomial([Fraction(x, lead) for x in self._den])

    @property
    def is_zero(self) -> bool:
        return self._c == 0

    def __bool__(self):
        return self._c != 0

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QRational):
            return other
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                return QRational.zero()
            return QRational._raw(f, (1,), (1,))
        if isinstance(other, QPolynomial):
            return QRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._c == 0:
            return o
        if o._c == 0:
            return self
        n1, d1, n2, d2 = list(self._num), list(self._den), list(o._num), list(o._den)
        if d1 == d2:
            common = d1
            m1, m2 = n1, n2
            rest = [1]
        else:
            gp = _int_gcd(d1, d2)
            if len(gp) == 1:
                common = [1]
                m1 = K.poly_mul(n1, d2)
                m2 = K.poly_mul(n2, d1)
                rest = K.poly_mul(d1, d2)
            else:
                common = gp
                d1r = K.poly_divexact(d1, gp)
                d2r = K.poly_divexact(d2, gp)
                m1 = K.poly_mul(n1, d2r)
                m2 = K.poly_mul(n2, d1r)
                rest = K.poly_mul(d1r, d2r)
        # combined numerator c1*m1 + c2*m2 over common*rest
        c1, c2 = self._c, o._c
        den_lcm = _lcm(c1.denominator, c2.denominator)
        i1 = c1.numerator * (den_lcm // c1.denominator)
        i2 = c2.numerator * (den_lcm // c2.denominator)
        ln, lm = len(m1), len(m2)
        num = [0] * max(ln, lm)
        for i, v in enumerate(m1):
            num[i] += i1 * v
        for i, v in enumerate(m2):
            num[i] += i2 * v
        K.poly_trim(num)
        if not num:
            return QRational.zero()
        cont = K.poly_content(num)
        if num[-1] < 0:
            cont = -cont
        num = [x // cont for x in num]
        c3 = Fraction(cont, den_lcm)
        # any common factor of num and the denominator divides `common`
        if common != [1]:
            g3 = _int_gcd(num, common)
            if len(g3) > 1:
                num = K.poly_divexact(num, g3)
                common = K.poly_divexact(common, g3)
        den = K.poly_mul(common, rest) if common != [1] else rest
        return QRational._raw(c3, num, den)

    __radd__ = __add__

    def __neg__(self):
        return QRational._raw(-self._c, self._num, self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._c == 0 or o._c == 0:
            return QRational.zero()
        n1, d1, n2, d2 = list(self._num), list(self._den), list(o._num), list(o._den)
        g1 = _int_gcd(n1, d2)
        if len(g1) > 1:
            n1 = K.poly_divexact(n1, g1)
            d2 = K.poly_divexact(d2, g1)
        g2 = _int_gcd(n2, d1)
        if len(g2) > 1:
            n2 = K.poly_divexact(n2, g2)
            d1 = K.poly_divexact(d1, g2)
        return QRational._raw(self._c * o._c, K.poly_mul(n1, n2), K.poly_mul(d1, d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._c == 0:
            raise ZeroDivisionError("division by the zero rational function")
        # reciprocal of c*N/D is (1/c)*D/N; N and D are primitive with
        # positive leading coefficient, so the swap stays canonical
        inv = QRational._raw(1 / o._c, o._den, o._num)
        return self * inv

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n == 0:
            return QRational.one()
        base = self
        if n < 0:
            base = QRational.one() / self
            n = -n
        out = QRational.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c and self._num == o._num and self._den == o._den

    def __hash__(self):
        return hash(("QRational", self._c, self._num, self._den))

    # -- the q -> 1/q involution and evaluation -----------------------------

    def invert_q(self) -> "QRational":
        """The substitution q -> 1/q, returned in canonical form.

        Clearing powers of q makes this an involution on Q(q) exactly.
        """
        if self._c == 0:
            return self
        dn, dd = len(self._num) - 1, len(self._den) - 1
        rn = K.poly_trim(list(reversed(self._num)))
        rd = K.poly_trim(list(reversed(self._den)))
        shift = dd - dn
        if shift >= 0:
            rn = [0] * shift + rn
        else:
            rd = [0] * (-shift) + rd
        c = self._c
        if rn[-1] < 0:
            rn = [-x for x in rn]
            c = -c
        if rd[-1] < 0:
            rd = [-x for x in rd]
            c = -c
        return QRational._raw(c, rn, rd)

    def evaluate(self, q0) -> Fraction:
        """Exact evaluation at a rational point; PoleError at a denominator root."""
        q0 = Fraction(q0)
        dval = K.poly_eval_int(list(self._den), q0)
        if dval == 0:
            raise PoleError(f"pole at q = {q0}")
        if self._c == 0:
            return Fraction(0)
        nval = K.poly_eval_int(list(self._num), q0)
        return self._c * nval / dval

    # -- rendering -----------------------------------------------------------

    def to_text(self) -> str:
        """Plain-text rendering, e.g. ``(-2*q)/(1+q)``; exact round-trip
        through `parse_qrational`."""
        num_txt = _render_poly(self.num.coeffs, "q", latex=False)
        if self.den.degree == 0:
            return num_txt
        den_txt = _render_poly(self.den.coeffs, "q", latex=False)
        return f"({num_txt})/({den_txt})"

    def to_latex(self) -> str:
        """LaTeX rendering, e.g. ``\\frac{-2q}{1+q}``."""
        num_txt = _render_poly(self.num.coeffs, "q", latex=True)
        if self.den.degree == 0:
            return num_txt
        den_txt = _render_poly(self.den.coeffs, "q", latex=True)
        return f"\\frac{{{num_txt}}}{{{den_txt}}}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"QRational({self.to_text()!r})"


def _canonical_triplet(num: QPolynomial, den: QPolynomial):
    """Reduce an arbitrary num/den pair to the internal canonical triplet."""
    if den.is_zero:
        raise ZeroDivisionError("zero denominator in QRational")
    if num.is_zero:
        return Fraction(0), (), (1,)
    cn, pn = num.content_primitive()
    cd, pd = den.content_primitive()
    g = _int_gcd(pn, pd)
    if len(g) > 1:
        pn = K.poly_divexact(pn, g)
        pd = K.poly_divexact(pd, g)
    return cn / cd, tuple(pn), tuple(pd)


# -- polynomials in x over QRational ----------------------------------------


class XPolynomial:
    """Polynomial in x with QRational coefficients (dense, trailing nonzero)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, QRational):
                cs.append(c)
            elif isinstance(c, (int, Fraction, QPolynomial)):
                cs.append(QRational(c))
            else:
                raise TypeError(f"bad XPolynomial coefficient {type(c)}")
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("XPolynomial is immutable")

    @classmethod
    def x_power(cls, k: int) -> "XPolynomial":
        return cls((QRational.zero(),) * k + (QRational.one(),))

    @classmethod
    def constant(cls, c) -> "XPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> QRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return QRational.zero()

    def _coerce(self, other):
        if isinstance(other, XPolynomial):
            return other
        if isinstance(other, (int, Fraction, QPolynomial, QRational)):
            return XPolynomial((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial, QRational)):
            s = other if isinstance(other, QRational) else QRational(other)
            return XPolynomial([c * s for c in self.coeffs])
        if not isinstance(other, XPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return XPolynomial()
        out = [QRational.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return XPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial, QRational)):
            s = other if isinstance(other, QRational) else QRational(other)
            return XPolynomial([c / s for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = XPolynomial((QRational.one(),))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("XPolynomial", self.coeffs))

    def evaluate(self, x0) -> QRational:
        x0 = x0 if isinstance(x0, QRational) else QRational(x0)
        acc = QRational.zero()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose_shift(self, c) -> "XPolynomial":
        """P(x + c) by binomial expansion; degree and leading coefficient
        are preserved."""
        c = c if isinstance(c, QRational) else QRational(c)
        return self.compose_linear(c, QRational.one())

    def compose_linear(self, c0, c1) -> "XPolynomial":
        """P(c0 + c1*x) via Horner over XPolynomial."""
        c0 = c0 if isinstance(c0, QRational) else QRational(c0)
        c1 = c1 if isinstance(c1, QRational) else QRational(c1)
        lin = XPolynomial((c0, c1))
        acc = XPolynomial()
        for a in reversed(self.coeffs):
            acc = acc * lin + XPolynomial((a,))
        return acc

    def map_coeffs(self, fn) -> "XPolynomial":
        return XPolynomial([fn(c) for c in self.coeffs])

    def evaluate_coeffs(self, q0):
        """Specialize every coefficient at a rational q; returns a list of
        Fractions indexed by the power of x."""
        return [c.evaluate(q0) for c in self.coeffs]

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            txt = c.to_text()
            if k == 0:
                term = f"({txt})" if _has_toplevel_sum(txt) else txt
            else:
                xs = "x" if k == 1 else f"x^{k}"
                if txt == "1":
                    term = xs
                elif txt == "-1":
                    term = f"-{xs}"
                elif _is_simple_term(txt):
                    term = f"{txt}*{xs}"
                else:
                    term = f"({txt})*{xs}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"XPolynomial({self.to_text()!r})"


def _is_simple_term(txt: str) -> bool:
    """A rendering that can take a '*x^k' suffix without parentheses."""
    body = txt[1:] if txt.startswith("-") else txt
    return body.isdigit() or (body.count("/") == 1 and all(p.isdigit() for p in body.split("/")))


def _has_toplevel_sum(txt: str) -> bool:
    depth = 0
    for i, ch in enumerate(txt):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
    return False


# -- text rendering and parsing ---------------------------------------------


def _render_frac(c: Fraction, latex: bool) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def _render_poly(coeffs, var: str, latex: bool) -> str:
    if not coeffs:
        return "0"
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if latex:
            vs = "" if i == 0 else (var if i == 1 else f"{var}^{{{i}}}")
        else:
            vs = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not vs:
            terms.append(_render_frac(c, latex))
        elif c == 1:
            terms.append(vs)
        elif c == -1:
            terms.append(f"-{vs}")
        else:
            sep = "" if latex else "*"
            terms.append(f"{_render_frac(c, latex)}{sep}{vs}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else f"+{t}"
    return out


class _Parser:
    """Recursive-descent parser for rational-function expressions in q.

    Grammar (standard precedence, left-associative * and /):
        expr   := term (('+' | '-') term)*
        term   := factor (('*' | '/') factor)*
        factor := '-' factor | atom ('^' integer)?
        atom   := integer | 'q' | '(' expr ')'
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> QRational:
        val = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at column {self.pos}: {self.text[self.pos:]!r}")
        return val

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> QRational:
        val = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                val = val + self.term()
            elif ch == "-":
                self.pos += 1
                val = val - self.term()
            else:
                return val

    def term(self) -> QRational:
        val = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                val = val * self.factor()
            elif ch == "/":
                self.pos += 1
                val = val / self.factor()
            else:
                return val

    def factor(self) -> QRational:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        val = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return val ** self.integer()
        return val

    def atom(self) -> QRational:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            val = self.expr()
            if self.peek() != ")":
                raise ValueError(f"expected ')' at column {self.pos}")
            self.pos += 1
            return val
        if ch == "q":
            self.pos += 1
            return QRational.q()
        if ch.isdigit():
            return QRational(self.integer())
        raise ValueError(f"unexpected {ch!r} at column {self.pos}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise ValueError(f"expected integer at column {start}")
        return int(self.text[start:self.pos])


def parse_qrational(text: str) -> QRational:
    """Parse the plain-text rendering back to a QRational (exact round-trip)."""
    return _Parser(text).parse()
