"""Exact multivariate polynomial arithmetic over the rationals.

The ring is Q[t1..tn, y1..yn, z]: base coordinates t_i, conjugate fiber
coordinates y_i on the cotangent space, and one reserved auxiliary
variable z used by radical-membership queries.  Every coefficient is an
exact ``fractions.Fraction``; there is deliberately no floating-point
mode anywhere in the kernel, because every downstream verdict (ideal
membership, Poisson stability, structure-identity defects) is an exact
algebraic identity.

A polynomial is stored sparsely as a map from exponent tuples to nonzero
rational coefficients.  Values are immutable after construction and all
operations are pure, so they are safe to share freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence

Rational = Fraction

# Exponent tuple, one entry per variable of the owning VariableSet.
Monomial = tuple[int, ...]


class ParseError(ValueError):
    """Raised on malformed expression input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


class VariableSet:
    """The fixed coordinate system t1..tn, y1..yn, z of one computation.

    The ordering of names is fixed for the lifetime of a computation; z is
    reserved for radical-membership queries and is always the least
    significant variable in every monomial order built on this set.
    """

    __slots__ = ("n", "names", "_index", "_sig")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"dimension must be >= 1, got {n}")
        self.n = n
        names = [f"t{i}" for i in range(1, n + 1)]
        names += [f"y{i}" for i in range(1, n + 1)]
        names.append("z")
        self.names: tuple[str, ...] = tuple(names)
        self._index = {name: i for i, name in enumerate(names)}
        # Significance order used for canonical printing and as the default
        # monomial order: y-block above t-block, z last.
        self._sig: tuple[int, ...] = tuple(
            list(range(n, 2 * n)) + list(range(n)) + [2 * n]
        )

    @property
    def nvars(self) -> int:
        return 2 * self.n + 1

    def t_index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"t{i} out of range for n={self.n}")
        return i - 1

    def y_index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"y{i} out of range for n={self.n}")
        return self.n + i - 1

    @property
    def z_index(self) -> int:
        return 2 * self.n

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    # -- polynomial constructors ------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, value) -> "Polynomial":
        c = Fraction(value)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def one(self) -> "Polynomial":
        return self.const(1)

    def variable(self, index: int) -> "Polynomial":
        exp = [0] * self.nvars
        exp[index] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def t(self, i: int) -> "Polynomial":
        return self.variable(self.t_index(i))

    def y(self, i: int) -> "Polynomial":
        return self.variable(self.y_index(i))

    def z(self) -> "Polynomial":
        return self.variable(self.z_index)

    def parse(self, src: str, aliases: Mapping[str, str] | None = None) -> "Polynomial":
        return parse_poly(src, self, aliases=aliases)

    # -- monomial order keys ----------------------------------------------

    def degrevlex_key(self) -> Callable[[Monomial], tuple]:
        """Graded reverse lexicographic key over y1..yn > t1..tn > z."""
        rev = tuple(reversed(self._sig))

        def key(m: Monomial) -> tuple:
            return (sum(m), tuple(-m[i] for i in rev))

        return key

    def lex_key(self) -> Callable[[Monomial], tuple]:
        sig = self._sig

        def key(m: Monomial) -> tuple:
            return tuple(m[i] for i in sig)

        return key

    def y_block_key(self) -> Callable[[Monomial], tuple]:
        """Block elimination key: y-block (degrevlex) above t-block, z last."""
        n = self.n
        y_rev = tuple(range(2 * n - 1, n - 1, -1))
        t_rev = tuple(range(n - 1, -1, -1))
        zi = self.z_index

        def key(m: Monomial) -> tuple:
            ydeg = sum(m[i] for i in y_rev)
            tdeg = sum(m[i] for i in t_rev)
            return (
                ydeg,
                tuple(-m[i] for i in y_rev),
                tdeg,
                tuple(-m[i] for i in t_rev),
                m[zi],
            )

        return key

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableSet) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("VariableSet", self.n))

    def __repr__(self) -> str:
        return f"VariableSet(n={self.n})"


class Polynomial:
    """Sparse exact polynomial; term map from exponent tuples to Fractions.

    Zero coefficients are never stored, so equality is term-map equality.
    Instances are immutable by convention: no method mutates ``terms``.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VariableSet, terms: Mapping[Monomial, Fraction]):
        self.vars = vars
        self.terms: dict[Monomial, Fraction] = {
            m: c for m, c in terms.items() if c != 0
        }

    # -- predicates and views ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return 0
        return max(m[index] for m in self.terms)

    def y_degree(self) -> int:
        """Max total exponent over the y-variables across all terms."""
        n = self.vars.n
        if not self.terms:
            return 0
        return max(sum(m[n : 2 * n]) for m in self.terms)

    def uses_z(self) -> bool:
        zi = self.vars.z_index
        return any(m[zi] > 0 for m in self.terms)

    def uses_y(self) -> bool:
        return self.y_degree() > 0

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def sorted_terms(self, key=None) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending monomial order (default: degrevlex)."""
        if key is None:
            key = self.vars.degrevlex_key()
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_term(self, key) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=key)
        return m, self.terms[m]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError("polynomials belong to different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return self.vars.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.vars.zero()
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_mul(ma, mb)
                s = out.get(m, Fraction(0)) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.vars.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.vars.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus and substitution -------------------------------------------

    def diff(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to the indexed variable."""
        if not 0 <= index < self.vars.nvars:
            raise IndexError(f"variable index {index} out of range")
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[index]
            if e == 0:
                continue
            dm = list(m)
            dm[index] = e - 1
            key = tuple(dm)
            s = out.get(key, Fraction(0)) + c * e
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Polynomial(self.vars, out)

    def diff_t(self, i: int) -> "Polynomial":
        return self.diff(self.vars.t_index(i))

    def diff_y(self, i: int) -> "Polynomial":
        return self.diff(self.vars.y_index(i))

    def evaluate_base(self, t0: Sequence) -> "Polynomial":
        """Substitute t_i -> t0[i-1], leaving y-variables (and z) symbolic."""
        n = self.vars.n
        if len(t0) != n:
            raise ValueError(f"expected {n} base coordinates, got {len(t0)}")
        point = [Fraction(v) for v in t0]
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            for i in range(n):
                e = m[i]
                if e:
                    c = c * point[i] ** e
            if c == 0:
                continue
            key = (0,) * n + m[n:]
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Polynomial(self.vars, out)

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def to_string(p: Polynomial, key=None) -> str:
    """Canonical text form: terms descending in the monomial order,
    reduced fractions, explicit ``*`` and ``^``.

    ``parse_poly`` inverts this exactly, which is what makes the text form
    usable as the interchange format in reports and golden files.
    """
    if p.is_zero():
        return "0"
    names = p.vars.names
    pieces: list[str] = []
    for idx, (mono, coeff) in enumerate(p.sorted_terms(key)):
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, mono)
            if e > 0
        ]
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if idx == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# Expression parsing
#
# Grammar (EBNF, also documented in the README):
#
#   expr     = term { ("+" | "-") term } ;
#   term     = factor { "*" factor } ;
#   factor   = "-" factor | atom [ "^" integer ] ;
#   atom     = rational | name | "(" expr ")" ;
#   rational = integer [ "/" integer ] ;
#
# Exponents are non-negative integer literals; names come from the
# VariableSet (plus caller-supplied aliases, used for vector-field input).
# ---------------------------------------------------------------------------

_TOKEN_INT = "int"
_TOKEN_NAME = "name"
_TOKEN_OP = "op"
_TOKEN_END = "end"


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i, length = 0, len(src)
    while i < length:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < length and src[j].isdigit():
                j += 1
            tokens.append((_TOKEN_INT, src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < length and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append((_TOKEN_NAME, src[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            tokens.append((_TOKEN_OP, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append((_TOKEN_END, "", length))
    return tokens


class _Parser:
    def __init__(self, src: str, vars: VariableSet, aliases: Mapping[str, str] | None):
        self.tokens = _tokenize(src)
        self.pos = 0
        self.vars = vars
        self.aliases = dict(aliases) if aliases else {}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, text, where = self.peek()
        if kind != _TOKEN_OP or text != op:
            raise ParseError(f"expected {op!r}", where)
        self.advance()

    def parse(self) -> Polynomial:
        value = self.expr()
        kind, text, where = self.peek()
        if kind != _TOKEN_END:
            raise ParseError(f"unexpected {text!r}", where)
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == _TOKEN_OP and text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == _TOKEN_OP and text == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Polynomial:
        kind, text, _ = self.peek()
        if kind == _TOKEN_OP and text == "-":
            self.advance()
            return -self.factor()
        value = self.atom()
        kind, text, where = self.peek()
        if kind == _TOKEN_OP and text == "^":
            self.advance()
            kind, text, where = self.peek()
            if kind == _TOKEN_OP and text == "-":
                raise ParseError("negative exponent", where)
            if kind != _TOKEN_INT:
                raise ParseError("expected integer exponent", where)
            self.advance()
            value = value ** int(text)
        return value

    def atom(self) -> Polynomial:
        kind, text, where = self.advance()
        if kind == _TOKEN_INT:
            numerator = int(text)
            kind, text, _ = self.peek()
            if kind == _TOKEN_OP and text == "/":
                self.advance()
                kind, text, dwhere = self.peek()
                if kind != _TOKEN_INT:
                    raise ParseError("expected integer denominator", dwhere)
                self.advance()
                if int(text) == 0:
                    raise ParseError("zero denominator", dwhere)
                return self.vars.const(Fraction(numerator, int(text)))
            return self.vars.const(numerator)
        if kind == _TOKEN_NAME:
            name = self.aliases.get(text, text)
            try:
                index = self.vars.index_of(name)
            except KeyError:
                raise ParseError(f"unknown variable {text!r}", where) from None
            return self.vars.variable(index)
        if kind == _TOKEN_OP and text == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected {text!r}" if text else "unexpected end of input", where)


def parse_poly(
    src: str, vars: VariableSet, aliases: Mapping[str, str] | None = None
) -> Polynomial:
    """Parse an expression string into a canonical Polynomial.

    ``aliases`` maps extra accepted names onto canonical variable names;
    the vector-field input format uses this to read e1..en as y1..yn.
    """
    return _Parser(src, vars, aliases).parse()


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Functional form of ring arithmetic: op in {"add", "sub", "mul"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f: Polynomial, v: int) -> Polynomial:
    """Functional form of Polynomial.diff for a raw variable index."""
    return f.diff(v)


def evaluate_base(f: Polynomial, t0: Sequence) -> Polynomial:
    """Functional form of Polynomial.evaluate_base."""
    return f.evaluate_base(t0)
