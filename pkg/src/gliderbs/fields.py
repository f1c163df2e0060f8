"""Exact arithmetic for the supported coefficient fields and their valuations.

Supported fields: Q, Q(i), Q(x), F_p(x), Q(x,y), plus the residue fields
they produce (prime fields F_p, the quadratic residue field F_p[i] of an
inert Gaussian prime, Q(y), and Q[x]/(g)).  Elements are immutable wrappers
around sympy's exact domain elements, so all arithmetic is exact and the
values are safe to share between threads.

Valuations: p-adic on Q, the three Gaussian prime splittings on Q(i),
x-adic / y-adic and irreducible-polynomial valuations on function fields,
and the lexicographic Z^2 composite (x-adic followed by y-adic on the
residue field) on Q(x,y).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.polys.domains import GF, QQ, QQ_I

from .errors import FieldMismatchError, ParseError, UnsupportedError

__all__ = [
    "INF", "Field", "FieldElem", "Valuation",
    "QQ_FIELD", "GAUSS_FIELD", "QX_FIELD", "QY_FIELD", "QXY_FIELD",
    "fp_func_field", "func_field", "prime_field", "inert_residue_field",
    "quot_field",
    "padic", "gauss_prime", "xadic", "yadic", "poly_prime", "composite2",
    "val", "uniformizer", "uniformizer_pair", "residue",
    "field_from_name",
]


class _Infinity:
    """Marker for the valuation of 0.  Distinct from every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INF = _Infinity()

_X, _Y = sympy.symbols("x y")


def _is_prime(n):
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
# fields
# ---------------------------------------------------------------------------

class Field:
    """A coefficient field descriptor.

    `kind` is one of 'Q', 'QI', 'FUNC' (one variable), 'FUNC2' (x,y over Q),
    'FP' (prime field), 'FP2' (F_p[i], p = 3 mod 4), 'QUOT' (Q[x]/(g)).
    Instances are interned, so identity comparison works for equal fields.
    """

    _cache = {}

    def __new__(cls, kind, **params):
        key = (kind, tuple(sorted(params.items())))
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.kind = kind
            inst.params = params
            inst._init()
            cls._cache[key] = inst
        return inst

    def _init(self):
        k = self.kind
        if k == "Q":
            self.name = "Q"
            self.domain = QQ
        elif k == "QI":
            self.name = "Q(i)"
            self.domain = QQ_I
        elif k == "FUNC":
            var = self.params["var"]
            p = self.params.get("char", 0)
            self.var = var
            self.char = p
            coeff = QQ if p == 0 else GF(p)
            self.domain = coeff.frac_field(sympy.Symbol(var))
            base = "Q" if p == 0 else f"F{p}"
            self.name = f"{base}({var})"
        elif k == "FUNC2":
            self.domain = QQ.frac_field(_X, _Y)
            self.name = "Q(x,y)"
        elif k == "FP":
            p = self.params["p"]
            if not _is_prime(p):
                raise UnsupportedError(f"{p} is not prime")
            self.p = p
            self.name = f"F{p}"
            self.domain = None
        elif k == "FP2":
            p = self.params["p"]
            if not _is_prime(p) or p % 4 != 3:
                raise UnsupportedError(
                    f"F_p[i] residue field needs p = 3 mod 4, got {p}")
            self.p = p
            self.name = f"F{p}[i]"
            self.domain = None
        elif k == "QUOT":
            # Q[x]/(g), g as a tuple of Fraction coefficients, low to high,
            # monic.  Used only as a residue field of poly_prime valuations.
            self.modulus = self.params["modulus"]
            self.name = "Q[x]/(g)"
            self.domain = None
        else:
            raise UnsupportedError(f"unknown field kind {k!r}")

    # -- construction of elements ------------------------------------------

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, q):
        q = Fraction(q)
        k = self.kind
        if k == "Q":
            rep = QQ(q.numerator, q.denominator)
        elif k == "QI":
            rep = QQ_I.new(QQ(q.numerator, q.denominator), QQ(0))
        elif k in ("FUNC", "FUNC2"):
            dom = self.domain
            if self.kind == "FUNC" and self.char:
                if q.denominator % self.char == 0:
                    raise FieldMismatchError(
                        f"denominator of {q} is zero in characteristic {self.char}")
                rep = dom(q.numerator) / dom(q.denominator)
            else:
                rep = dom(QQ(q.numerator, q.denominator))
        elif k == "FP":
            if q.denominator % self.p == 0:
                raise FieldMismatchError(f"{q} has no image in F_{self.p}")
            rep = (q.numerator * pow(q.denominator, -1, self.p)) % self.p
        elif k == "FP2":
            if q.denominator % self.p == 0:
                raise FieldMismatchError(f"{q} has no image in F_{self.p}[i]")
            rep = ((q.numerator * pow(q.denominator, -1, self.p)) % self.p, 0)
        elif k == "QUOT":
            rep = self._quot_normalize((q,))
        else:  # pragma: no cover
            raise UnsupportedError(k)
        return FieldElem(self, rep)

    def gen(self, name):
        """The named generator ('x', 'y', 'i', 't', ...) as an element."""
        k = self.kind
        if k == "QI" and name == "i":
            return FieldElem(self, QQ_I.new(QQ(0), QQ(1)))
        if k == "FP2" and name == "i":
            return FieldElem(self, (0, 1))
        if k == "FUNC" and name == self.var:
            return FieldElem(self, self.domain(sympy.Symbol(name)))
        if k == "FUNC2" and name in ("x", "y"):
            return FieldElem(self, self.domain(sympy.Symbol(name)))
        if k == "QUOT" and name == "x":
            return FieldElem(self, self._quot_normalize((Fraction(0), Fraction(1))))
        raise ParseError(f"field {self.name} has no generator {name!r}")

    def generator_names(self):
        k = self.kind
        if k == "QI" or k == "FP2":
            return ("i",)
        if k == "FUNC":
            return (self.var,)
        if k == "FUNC2":
            return ("x", "y")
        if k == "QUOT":
            return ("x",)
        return ()

    def _quot_normalize(self, coeffs):
        g = self.modulus
        n = len(g) - 1
        cs = list(coeffs)
        while len(cs) > n:
            lead = cs.pop()
            if lead:
                for i in range(n):
                    cs[len(cs) - n + i] -= lead * g[i]
        cs += [Fraction(0)] * (n - len(cs))
        return tuple(cs)

    def parse(self, text):
        return _parse_element(self, text)

    def __repr__(self):
        return f"Field({self.name})"


QQ_FIELD = Field("Q")
GAUSS_FIELD = Field("QI")
QX_FIELD = Field("FUNC", var="x", char=0)
QY_FIELD = Field("FUNC", var="y", char=0)
QXY_FIELD = Field("FUNC2")


def func_field(var, char=0):
    return Field("FUNC", var=var, char=char)


def fp_func_field(p, var="x"):
    if not _is_prime(p):
        raise UnsupportedError(f"{p} is not prime")
    return Field("FUNC", var=var, char=p)


def prime_field(p):
    return Field("FP", p=p)


def inert_residue_field(p):
    return Field("FP2", p=p)


def quot_field(modulus_coeffs):
    mod = tuple(Fraction(c) for c in modulus_coeffs)
    if not mod or mod[-1] != 1:
        raise UnsupportedError("quotient modulus must be monic")
    return Field("QUOT", modulus=mod)


_FIELD_NAMES = {
    "Q": QQ_FIELD,
    "Q(i)": GAUSS_FIELD,
    "Q(x)": QX_FIELD,
    "Q(y)": QY_FIELD,
    "Q(x,y)": QXY_FIELD,
}


def field_from_name(name):
    name = name.strip()
    if name in _FIELD_NAMES:
        return _FIELD_NAMES[name]
    m = re.fullmatch(r"F(\d+)\((\w)\)", name)
    if m:
        return fp_func_field(int(m.group(1)), m.group(2))
    m = re.fullmatch(r"F(\d+)", name)
    if m:
        return prime_field(int(m.group(1)))
    raise ParseError(f"unknown field name {name!r}")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FieldElem:
    """Immutable element of a supported field."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, *args):
        raise AttributeError("FieldElem is immutable")

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"mixed fields {self.field.name} and {other.field.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        return NotImplemented

    # -- ring/field operations ----------------------------------------------

    def _binop(self, other, op):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        k = f.kind
        a, b = self.rep, other.rep
        if k in ("Q", "QI", "FUNC", "FUNC2"):
            if op == "add":
                return FieldElem(f, a + b)
            if op == "sub":
                return FieldElem(f, a - b)
            if op == "mul":
                return FieldElem(f, a * b)
            if op == "div":
                if not b:
                    raise ZeroDivisionError("division by zero field element")
                if k == "QI":
                    return FieldElem(f, QQ_I.quo(a, b))
                if k == "Q":
                    return FieldElem(f, QQ.quo(a, b))
                return FieldElem(f, a / b)
        if k == "FP":
            p = f.p
            if op == "add":
                return FieldElem(f, (a + b) % p)
            if op == "sub":
                return FieldElem(f, (a - b) % p)
            if op == "mul":
                return FieldElem(f, (a * b) % p)
            if op == "div":
                if b % p == 0:
                    raise ZeroDivisionError("division by zero in F_p")
                return FieldElem(f, (a * pow(b, -1, p)) % p)
        if k == "FP2":
            p = f.p
            a0, a1 = a
            b0, b1 = b
            if op == "add":
                return FieldElem(f, ((a0 + b0) % p, (a1 + b1) % p))
            if op == "sub":
                return FieldElem(f, ((a0 - b0) % p, (a1 - b1) % p))
            if op == "mul":
                return FieldElem(f, ((a0 * b0 - a1 * b1) % p,
                                     (a0 * b1 + a1 * b0) % p))
            if op == "div":
                n = (b0 * b0 + b1 * b1) % p
                if n == 0:
                    raise ZeroDivisionError("division by zero in F_p[i]")
                ninv = pow(n, -1, p)
                c0 = ((a0 * b0 + a1 * b1) * ninv) % p
                c1 = ((a1 * b0 - a0 * b1) * ninv) % p
                return FieldElem(f, (c0, c1))
        if k == "QUOT":
            if op == "add":
                return FieldElem(f, tuple(u + v for u, v in zip(a, b)))
            if op == "sub":
                return FieldElem(f, tuple(u - v for u, v in zip(a, b)))
            if op == "mul":
                n = len(a)
                prod = [Fraction(0)] * (2 * n - 1)
                for i, u in enumerate(a):
                    if u:
                        for j, v in enumerate(b):
                            prod[i + j] += u * v
                return FieldElem(f, f._quot_normalize(prod))
            if op == "div":
                return self * other._quot_inverse()
        raise UnsupportedError(f"operation {op} on {k}")  # pragma: no cover

    def _quot_inverse(self):
        f = self.field
        g = sympy.Poly([sympy.Rational(c) for c in reversed(f.modulus)], _X)
        a = sympy.Poly([sympy.Rational(c) for c in reversed(self.rep)], _X)
        if a.is_zero:
            raise ZeroDivisionError("division by zero in quotient field")
        inv = sympy.invert(a, g)
        cs = [Fraction(*sympy.Rational(c).as_numer_denom())
              for c in reversed(sympy.Poly(inv, _X).all_coeffs())]
        return FieldElem(f, f._quot_normalize(cs))

    def __add__(self, other):
        return self._binop(other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, "sub")

    def __rsub__(self, other):
        return (-self)._binop(other, "add")

    def __mul__(self, other):
        return self._binop(other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, "div")

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other._binop(self, "div")

    def __neg__(self):
        return self.field.zero() - self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.field.one() / (self ** (-n))
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        k = self.field.kind
        if k == "FP":
            return self.rep % self.field.p != 0
        if k == "FP2":
            return any(c % self.field.p for c in self.rep)
        if k == "QUOT":
            return any(self.rep)
        return bool(self.rep)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = self.field.from_fraction(Fraction(other))
            except FieldMismatchError:
                return NotImplemented
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.field is other.field and self.rep == other.rep

    def __hash__(self):
        rep = self.rep
        if isinstance(rep, list):  # pragma: no cover - defensive
            rep = tuple(rep)
        return hash((self.field.name, rep))

    def __str__(self):
        return _print_element(self)

    def __repr__(self):
        return f"<{self.field.name}: {self}>"


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _print_rational(q_num, q_den=1):
    if q_den == 1:
        return str(q_num)
    return f"{q_num}/{q_den}"


def _qq_str(q):
    return _print_rational(int(q.numerator), int(q.denominator))


def _print_gauss(re_part, im_part):
    def imag(b):
        num, den = int(b.numerator), int(b.denominator)
        sign = "-" if num < 0 else ""
        num = abs(num)
        if num == 1 and den == 1:
            return sign + "i"
        return sign + _print_rational(num, den) + "i"

    if not im_part:
        return _qq_str(re_part)
    if not re_part:
        return imag(im_part)
    im = imag(im_part)
    joiner = "" if im.startswith("-") else "+"
    return _qq_str(re_part) + joiner + im


def _coeff_str(c, char):
    if char:
        return str(int(c) % char)
    return _print_rational(int(c.numerator), int(c.denominator))


def _coeff_is_one(c, char):
    if char:
        return int(c) % char == 1
    return c == 1


def _coeff_is_neg(c, char):
    if char:
        return False
    return c < 0


def _print_poly(poly, gens, char):
    """Canonical infix form of a PolyElement: monomials in descending
    lexicographic exponent order, '^' for powers."""
    terms = sorted(poly.terms(), key=lambda t: t[0], reverse=True)
    if not terms:
        return "0"
    parts = []
    for mono, coeff in terms:
        factors = []
        for g, e in zip(gens, mono):
            if e == 1:
                factors.append(g)
            elif e > 1:
                factors.append(f"{g}^{e}")
        neg = _coeff_is_neg(coeff, char)
        c = -coeff if neg else coeff
        if not factors:
            body = _coeff_str(c, char)
        elif _coeff_is_one(c, char):
            body = "*".join(factors)
        else:
            body = "*".join([_coeff_str(c, char)] + factors)
        parts.append(("-" if neg else "+", body))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _print_func(elem):
    field = elem.field
    rep = elem.rep
    char = field.char if field.kind == "FUNC" else 0
    gens = field.generator_names()
    num, den = rep.numer, rep.denom
    # normalize to a monic denominator (scale num and den by 1/lc(den))
    lead = den.LC
    dom = den.ring.domain
    if lead != dom.one:
        inv = dom.quo(dom.one, lead)
        num = num.mul_ground(inv)
        den = den.mul_ground(inv)
    num_s = _print_poly(num, gens, char)
    if den == den.ring.one:
        return num_s
    den_s = _print_poly(den, gens, char)
    return f"({num_s})/({den_s})"


def _print_element(elem):
    k = elem.field.kind
    rep = elem.rep
    if k == "Q":
        return _qq_str(rep)
    if k == "QI":
        return _print_gauss(rep.x, rep.y)
    if k in ("FUNC", "FUNC2"):
        return _print_func(elem)
    if k == "FP":
        return str(rep % elem.field.p)
    if k == "FP2":
        p = elem.field.p
        return _print_gauss(Fraction(rep[0] % p), Fraction(rep[1] % p))
    if k == "QUOT":
        parts = []
        for e in range(len(rep) - 1, -1, -1):
            c = rep[e]
            if not c:
                continue
            if e == 0:
                body = _print_rational(abs(c.numerator), c.denominator)
            else:
                xs = "x" if e == 1 else f"x^{e}"
                body = xs if abs(c) == 1 else \
                    _print_rational(abs(c.numerator), c.denominator) + "*" + xs
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out
    raise UnsupportedError(k)  # pragma: no cover


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<imag>\d+(?:/\d+)?i)|(?P<int>\d+)|(?P<name>[a-zA-Z]\w*)"
    r"|(?P<pow>\*\*|\^)|(?P<op>[-+*/()]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "pow":
            out.append(("op", "^", m.start()))
        elif m.lastgroup == "imag":
            out.append(("imag", m.group("imag")[:-1], m.start()))
        elif m.lastgroup == "int":
            out.append(("int", m.group("int"), m.start()))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name"), m.start()))
        else:
            out.append(("op", m.group("op"), m.start()))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, field, tokens):
        self.field = field
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        kind, v, pos = self.next()
        if kind != "op" or v != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self):
        e = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {v!r}", pos)
        return e

    def expr(self):
        kind, v, _ = self.peek()
        neg = False
        while kind == "op" and v in "+-":
            self.next()
            if v == "-":
                neg = not neg
            kind, v, _ = self.peek()
        e = self.term()
        if neg:
            e = -e
        while True:
            kind, v, _ = self.peek()
            if kind == "op" and v in "+-":
                self.next()
                rhs = self.term()
                e = e - rhs if v == "-" else e + rhs
            else:
                return e

    def term(self):
        e = self.factor()
        while True:
            kind, v, _ = self.peek()
            if kind == "op" and v in "*/":
                self.next()
                rhs = self.factor()
                if v == "/":
                    if not rhs:
                        raise ParseError("division by zero in literal")
                    e = e / rhs
                else:
                    e = e * rhs
            else:
                return e

    def factor(self):
        kind, v, pos = self.peek()
        if kind == "op" and v == "-":
            self.next()
            return -self.factor()
        e = self.atom()
        kind, v, _ = self.peek()
        if kind == "op" and v == "^":
            self.next()
            k2, v2, p2 = self.next()
            sign = 1
            if k2 == "op" and v2 == "-":
                sign = -1
                k2, v2, p2 = self.next()
            if k2 != "int":
                raise ParseError("exponent must be an integer", p2)
            e = e ** (sign * int(v2))
        return e

    def atom(self):
        kind, v, pos = self.next()
        if kind == "int":
            return self.field.from_int(int(v))
        if kind == "imag":
            coeff = Fraction(v) if "/" not in v else Fraction(*map(int, v.split("/")))
            return self.field.from_fraction(coeff) * self.field.gen("i")
        if kind == "name":
            return self.field.gen(v)
        if kind == "op" and v == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        raise ParseError(f"unexpected token {v!r}", pos)


def _parse_element(field, text):
    if not isinstance(text, str):
        raise ParseError(f"expected string, got {type(text).__name__}")
    return _Parser(field, _tokenize(text)).parse()


# ---------------------------------------------------------------------------
# valuation helpers on raw reps
# ---------------------------------------------------------------------------

def _int_val(n, p):
    n = abs(int(n))
    if n == 0:
        raise ZeroDivisionError
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _qq_val(q, p):
    return _int_val(q.numerator, p) - _int_val(q.denominator, p)


def _poly_var_val(poly, axis):
    """Least exponent of the given generator among the monomials."""
    return min(t[0][axis] for t in poly.terms())


def _poly_shift(poly, axis, k):
    """Divide a PolyElement by gen^k (k <= trailing degree)."""
    ring = poly.ring
    d = {}
    for mono, coeff in poly.terms():
        m = list(mono)
        m[axis] -= k
        if m[axis] < 0:
            raise ValueError("shift below zero")
        d[tuple(m)] = coeff
    return ring.from_dict(d)


def _poly_sub_zero(poly, axis):
    """Substitute gen_axis = 0 (keep monomials with exponent 0 there)."""
    ring = poly.ring
    d = {}
    for mono, coeff in poly.terms():
        if mono[axis] == 0:
            d[mono] = coeff
    return ring.from_dict(d)


def _gauss_int_parts(z):
    """z in QQ_I as (a_num, b_num, den) with integer a, b and positive den."""
    ax, ay = Fraction(int(z.x.numerator), int(z.x.denominator)), \
        Fraction(int(z.y.numerator), int(z.y.denominator))
    den = ax.denominator * ay.denominator // _gcd(ax.denominator, ay.denominator)
    return ax.numerator * (den // ax.denominator), \
        ay.numerator * (den // ay.denominator), den


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# valuations
# ---------------------------------------------------------------------------

class Valuation:
    """A discrete (rank-1) or lexicographic rank-2 valuation.

    kinds: 'padic', 'gauss', 'xadic', 'yadic', 'polyprime', 'composite2'.
    """

    _cache = {}

    def __new__(cls, kind, field, **params):
        key = (kind, field.name, tuple(sorted(
            (k, v if not isinstance(v, FieldElem) else str(v))
            for k, v in params.items())))
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.kind = kind
            inst.field = field
            inst.params = params
            inst._init()
            cls._cache[key] = inst
        return inst

    def _init(self):
        k = self.kind
        if k == "padic":
            p = self.params["p"]
            if not _is_prime(p):
                raise UnsupportedError(f"{p} is not prime")
            self.p = p
            self.name = f"v_{p}"
        elif k == "gauss":
            self.pi = self.params["pi"]
            self.case = self.params["case"]
            self.name = f"v_({self.pi})"
            if self.case == "split":
                a, b, den = _gauss_int_parts(self.pi.rep)
                assert den == 1
                self.norm_p = a * a + b * b
                self._split_root = (-a * pow(b, -1, self.norm_p)) % self.norm_p
            elif self.case == "inert":
                a, b, den = _gauss_int_parts(self.pi.rep)
                self.norm_p = abs(a)
            else:
                self.norm_p = 2
        elif k in ("xadic", "yadic"):
            self.axis = self.params["axis"]
            self.name = f"v_{self.field.generator_names()[self.axis]}"
        elif k == "polyprime":
            self.g = self.params["g"]  # FieldElem, irreducible polynomial
            self.name = f"v_({self.g})"
        elif k == "composite2":
            self.name = "v_(x,y)-lex"
        else:  # pragma: no cover
            raise UnsupportedError(k)

    @property
    def rank(self):
        return 2 if self.kind == "composite2" else 1

    def _check_field(self, x):
        if not isinstance(x, FieldElem) or x.field is not self.field:
            got = x.field.name if isinstance(x, FieldElem) else type(x).__name__
            raise FieldMismatchError(
                f"valuation {self.name} is defined on {self.field.name}, got {got}")

    # -- valuation ----------------------------------------------------------

    def __call__(self, x):
        self._check_field(x)
        if not x:
            return INF
        k = self.kind
        if k == "padic":
            return _qq_val(x.rep, self.p)
        if k == "gauss":
            return self._gauss_val(x.rep)
        if k in ("xadic", "yadic"):
            rep = x.rep
            return (_poly_var_val(rep.numer, self.axis)
                    - _poly_var_val(rep.denom, self.axis))
        if k == "polyprime":
            return self._poly_prime_val(x)
        if k == "composite2":
            ax = _poly_var_val(x.rep.numer, 0) - _poly_var_val(x.rep.denom, 0)
            r = _stage_one_residue(x, ax)
            ay = _poly_var_val(r.rep.numer, 0) - _poly_var_val(r.rep.denom, 0)
            return (ax, ay)
        raise UnsupportedError(k)  # pragma: no cover

    def _gauss_val(self, z):
        a, b, den = _gauss_int_parts(z)
        p = self.norm_p
        if self.case == "ramified":
            nrm = a * a + b * b
            return _int_val(nrm, 2) - 2 * _int_val(den, 2)
        if self.case == "inert":
            nrm = a * a + b * b
            v2 = _int_val(nrm, p)
            assert v2 % 2 == 0
            return v2 // 2 - _int_val(den, p)
        # split: count exact divisions of a+bi by pi in Z[i];
        # dividing by p = pi*conj(pi) removes exactly one factor of pi
        v = 0
        while (a % p == 0 and b % p == 0):
            a //= p
            b //= p
            v += 1
        # now divide by pi while possible: (a+bi)/pi integral iff
        # (a+bi)*conj(pi) = 0 mod p
        pa, pb, _ = _gauss_int_parts(self.pi.rep)
        while True:
            na = a * pa + b * pb
            nb = b * pa - a * pb
            if na % p or nb % p:
                break
            a, b = na // p, nb // p
            v += 1
        return v - _int_val(den, p)

    def _poly_prime_val(self, x):
        g = self.g.rep.numer

        def count(poly):
            v = 0
            while True:
                q, r = poly.div(g)
                if r:
                    return v, poly
                poly = q
                v += 1

        vn, _ = count(x.rep.numer)
        vd, _ = count(x.rep.denom)
        return vn - vd

    # -- uniformizers ---------------------------------------------------------

    def uniformizer(self):
        k = self.kind
        if k == "composite2":
            raise UnsupportedError(
                "rank-2 valuation has no single uniformizer; "
                "use uniformizer_pair")
        if k == "padic":
            return self.field.from_int(self.p)
        if k == "gauss":
            return self.pi
        if k in ("xadic", "yadic"):
            return self.field.gen(self.field.generator_names()[self.axis])
        if k == "polyprime":
            return self.g
        raise UnsupportedError(k)  # pragma: no cover

    def uniformizer_pair(self):
        if self.kind != "composite2":
            raise UnsupportedError("uniformizer_pair needs a rank-2 valuation")
        return (self.field.gen("x"), self.field.gen("y"))

    # -- residues -------------------------------------------------------------

    def residue_field(self):
        k = self.kind
        if k == "padic":
            return prime_field(self.p)
        if k == "gauss":
            if self.case == "inert":
                return inert_residue_field(self.norm_p)
            return prime_field(self.norm_p)
        if k in ("xadic", "yadic"):
            f = self.field
            if f.kind == "FUNC":
                return prime_field(f.char) if f.char else QQ_FIELD
            return QY_FIELD if self.axis == 0 else QX_FIELD
        if k == "polyprime":
            num = self.g.rep.numer
            deg = max(t[0][0] for t in num.terms())
            coeffs = [Fraction(0)] * (deg + 1)
            for mono, c in num.terms():
                coeffs[mono[0]] = Fraction(int(c.numerator), int(c.denominator))
            lead = coeffs[-1]
            coeffs = [c / lead for c in coeffs]
            return quot_field(coeffs)
        if k == "composite2":
            return QQ_FIELD
        raise UnsupportedError(k)  # pragma: no cover

    def residue(self, x):
        self._check_field(x)
        v = self(x)
        if v is INF:
            return self.residue_field().zero()
        if self.rank == 1:
            if v < 0:
                raise UnsupportedError(
                    f"residue of element with negative valuation {v}")
            if v > 0:
                return self.residue_field().zero()
            return self._residue0(x)
        # composite2: lex value must be >= (0,0)
        if v[0] < 0:
            raise UnsupportedError(
                f"residue of element with negative valuation {v}")
        if v[0] > 0:
            return QQ_FIELD.zero()
        r = _stage_one_residue(x, 0)
        return yadic_on_qy().residue(r) if v[1] == 0 else (
            QQ_FIELD.zero() if v[1] > 0 else _raise_neg(v))

    def _residue0(self, x):
        k = self.kind
        if k == "padic":
            p = self.p
            num, den = int(x.rep.numerator), int(x.rep.denominator)
            return prime_field(p).from_fraction(Fraction(num, den))
        if k == "gauss":
            return self._gauss_residue(x)
        if k in ("xadic", "yadic"):
            return _func_residue(self.field, x, self.axis)
        if k == "polyprime":
            fld = self.residue_field()
            g = self.g.rep.numer

            def red(poly):
                _, r = poly.div(g)
                deg = len(fld.modulus) - 1
                coeffs = [Fraction(0)] * deg
                for mono, c in r.terms():
                    coeffs[mono[0]] = Fraction(int(c.numerator),
                                               int(c.denominator))
                return coeffs

            num = FieldElem(fld, fld._quot_normalize(red(x.rep.numer)))
            den = FieldElem(fld, fld._quot_normalize(red(x.rep.denom)))
            return num / den
        raise UnsupportedError(k)  # pragma: no cover

    def _gauss_residue(self, x):
        z = x.rep
        a, b, den = _gauss_int_parts(z)
        p = self.norm_p
        if self.case == "ramified":
            # residue field F_2; i = 1 there, odd denominator
            return prime_field(2).from_fraction(Fraction(a + b, den))
        if self.case == "inert":
            fld = inert_residue_field(p)
            dinv = pow(den, -1, p)
            return FieldElem(fld, ((a * dinv) % p, (b * dinv) % p))
        r = self._split_root
        return prime_field(p).from_fraction(Fraction(a + b * r, den))

    def lift(self, r):
        """Canonical lift of a residue-field element back into the field."""
        rk = r.field.kind
        f = self.field
        k = self.kind
        if k == "padic":
            return f.from_int(r.rep % r.field.p)
        if k == "gauss":
            if self.case == "inert":
                a, b = r.rep
                return f.from_int(a) + f.from_int(b) * f.gen("i")
            return f.from_int(r.rep % r.field.p)
        if k in ("xadic", "yadic"):
            return _func_lift(f, r, self.axis)
        if k == "polyprime":
            x = f.gen(f.generator_names()[0])
            out = f.zero()
            for e, c in enumerate(r.rep):
                if c:
                    out = out + f.from_fraction(c) * x ** e
            return out
        if k == "composite2":
            assert rk == "Q"
            return f.from_fraction(Fraction(int(r.rep.numerator),
                                            int(r.rep.denominator)))
        raise UnsupportedError(k)  # pragma: no cover

    def __repr__(self):
        return f"Valuation({self.name} on {self.field.name})"


def _raise_neg(v):
    raise UnsupportedError(f"residue of element with negative valuation {v}")


def _const_coeff(poly):
    """Coefficient of the constant monomial of a PolyElement."""
    for mono, c in poly.terms():
        if all(e == 0 for e in mono):
            return c
    return poly.ring.domain.zero


def _func_residue(field, x, axis):
    """Residue of an axis-adic valuation-zero element of a function field."""
    num, den = x.rep.numer, x.rep.denom
    vn = _poly_var_val(num, axis)
    vd = _poly_var_val(den, axis)
    if vn != vd:  # pragma: no cover - guarded by caller
        raise UnsupportedError("nonzero valuation")
    if vn:
        num = _poly_shift(num, axis, vn)
        den = _poly_shift(den, axis, vn)
    num0 = _poly_sub_zero(num, axis)
    den0 = _poly_sub_zero(den, axis)
    if field.kind == "FUNC":
        # residue is a constant of the coefficient field
        cn = _const_coeff(num0)
        cd = _const_coeff(den0)
        if field.char:
            fp = prime_field(field.char)
            return fp.from_int(int(cn)) / fp.from_int(int(cd))
        return QQ_FIELD.from_fraction(
            Fraction(int(cn.numerator), int(cn.denominator))) / \
            QQ_FIELD.from_fraction(
                Fraction(int(cd.numerator), int(cd.denominator)))
    # FUNC2: residue lives in the function field of the other variable
    other = QY_FIELD if axis == 0 else QX_FIELD
    var = other.gen(other.var)

    def to_other(poly):
        out = other.zero()
        oaxis = 1 - axis
        for mono, c in poly.terms():
            q = Fraction(int(c.numerator), int(c.denominator))
            out = out + other.from_fraction(q) * var ** mono[oaxis]
        return out

    return to_other(num0) / to_other(den0)


def _func_lift(field, r, axis):
    if field.kind == "FUNC":
        if field.char:
            return field.from_int(r.rep % r.field.p)
        return field.from_fraction(
            Fraction(int(r.rep.numerator), int(r.rep.denominator)))
    # FUNC2 <- Q(y) or Q(x)
    ovar = "y" if axis == 0 else "x"
    gen = field.gen(ovar)

    def embed(poly):
        out = field.zero()
        for mono, c in poly.terms():
            q = Fraction(int(c.numerator), int(c.denominator))
            out = out + field.from_fraction(q) * gen ** mono[0]
        return out

    return embed(r.rep.numer) / embed(r.rep.denom)


def _stage_one_residue(x, ax):
    """x-adic residue of x * x^{-ax} on Q(x,y), as an element of Q(y)."""
    f = x.field
    if ax:
        xg = f.gen("x")
        x = x * xg ** (-ax)
    return _func_residue(f, x, 0)


# ---------------------------------------------------------------------------
# constructors and spec operations
# ---------------------------------------------------------------------------

def padic(p):
    return Valuation("padic", QQ_FIELD, p=p)


def gauss_prime(pi):
    """Gaussian prime valuation on Q(i).

    Accepts exactly: a ramified associate of 1+i, an inert rational prime
    p = 3 mod 4, or a split factor a+bi of norm a prime p = 1 mod 4.  Other
    inputs are rejected; general number fields are out of scope.
    """
    if isinstance(pi, str):
        pi = GAUSS_FIELD.parse(pi)
    if not isinstance(pi, FieldElem) or pi.field is not GAUSS_FIELD:
        raise FieldMismatchError("gauss_prime needs an element of Q(i)")
    a, b, den = _gauss_int_parts(pi.rep)
    if den != 1:
        raise UnsupportedError(f"{pi} is not a Gaussian integer")
    nrm = a * a + b * b
    if nrm == 2:
        case = "ramified"
    elif b == 0 and _is_prime(abs(a)) and abs(a) % 4 == 3:
        case = "inert"
    elif _is_prime(nrm) and nrm % 4 == 1:
        case = "split"
    else:
        raise UnsupportedError(
            f"{pi} is not a supported Gaussian prime (norm {nrm}); "
            "only 1+i, inert p = 3 mod 4, and split factors are supported")
    return Valuation("gauss", GAUSS_FIELD, pi=pi, case=case)


def xadic(field=QX_FIELD):
    if field.kind == "FUNC":
        return Valuation("xadic", field, axis=0)
    if field.kind == "FUNC2":
        return Valuation("xadic", field, axis=0)
    raise FieldMismatchError(f"x-adic valuation undefined on {field.name}")


def yadic(field=QXY_FIELD):
    if field.kind == "FUNC2":
        return Valuation("yadic", field, axis=1)
    if field.kind == "FUNC":
        return Valuation("yadic", field, axis=0)
    raise FieldMismatchError(f"y-adic valuation undefined on {field.name}")


@lru_cache(maxsize=None)
def yadic_on_qy():
    return Valuation("yadic", QY_FIELD, axis=0)


def poly_prime(g, field=QX_FIELD):
    if isinstance(g, str):
        g = field.parse(g)
    if g.field is not field:
        raise FieldMismatchError("polynomial prime outside its field")
    if field.kind != "FUNC":
        raise UnsupportedError("poly_prime needs a one-variable function field")
    if g.rep.denom != g.rep.denom.ring.one:
        raise UnsupportedError("polynomial prime must be a polynomial")
    num = g.rep.numer
    sym = sympy.Symbol(field.var)
    if field.char:
        poly = sympy.Poly({m[0]: int(c) for m, c in num.terms()}, sym,
                          modulus=field.char)
    else:
        poly = sympy.Poly({m[0]: sympy.Rational(int(c.numerator),
                                                int(c.denominator))
                           for m, c in num.terms()}, sym)
    if not poly.is_irreducible:
        raise UnsupportedError(f"{g} is not irreducible")
    return Valuation("polyprime", field, g=g)


def composite2():
    """The lexicographic rank-2 valuation on Q(x,y): x-adic first, then
    y-adic on the residue field Q(y)."""
    return Valuation("composite2", QXY_FIELD)


def val(v, x):
    """Value of x under v; INF exactly for x = 0."""
    return v(x)


def uniformizer(v):
    return v.uniformizer()


def uniformizer_pair(v):
    return v.uniformizer_pair()


def residue(v, x):
    return v.residue(x)
