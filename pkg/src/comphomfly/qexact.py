"""Exact multivariate Laurent arithmetic and the symbolic-rank exponent algebra.

Polynomials live over arbitrary-precision integer coefficients with exact
rational exponents (halves come from brackets, smaller denominators from the
exceptional-series substitutions).  Engine output uses variables (q, a),
fixtures (q, t, a), finite-rank cross-checks (q,).  Canonical term order is
lexicographic on (a-exponent, q-exponent, t-exponent), which makes every
printed or serialized form deterministic.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import NamedTuple


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder; upstream formula bug."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ResidualRankError(ArithmeticError):
    """A symbolic exponent kept N^2 or 1/N parts where they must cancel."""


class SignedExponentError(ValueError):
    """(-1)^k is undefined for a non-integer exponent k."""


_PRIORITY = {"a": 0, "q": 1, "t": 2}
_STORAGE = {"q": 0, "t": 1, "a": 2}


def _var_rank(name):
    """Term-order priority: a outranks q outranks t."""
    return _PRIORITY.get(name, 3 + ord(name[0]))


def _storage_rank(name):
    """Variable-tuple layout: q, t, a (the term-file column order)."""
    return _STORAGE.get(name, 3 + ord(name[0]))


class Laurent:
    """Laurent polynomial with Fraction exponents over fixed variables.

    `vars` is a tuple of variable names; `terms` maps exponent tuples
    (aligned with `vars`) to nonzero ints.  Values are treated as immutable:
    every operation returns a fresh instance.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[tuple(Fraction(e) for e in exps)] = int(coeff)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def one(cls, vars):
        return cls(vars, {(Fraction(0),) * len(tuple(vars)): 1})

    @classmethod
    def monomial(cls, vars, coeff, **exps):
        vars = tuple(vars)
        unknown = set(exps) - set(vars)
        if unknown:
            raise ValueError("unknown variables %s" % sorted(unknown))
        key = tuple(Fraction(exps.get(v, 0)) for v in vars)
        return cls(vars, {key: coeff})

    @classmethod
    def var(cls, vars, name, power=1):
        return cls.monomial(vars, 1, **{name: Fraction(power)})

    # -- ring operations -----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Laurent):
            raise TypeError("expected Laurent, got %r" % (other,))
        if other.vars != self.vars:
            raise ValueError("variable mismatch: %s vs %s" % (self.vars, other.vars))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            nc = terms.get(exps, 0) + c
            if nc:
                terms[exps] = nc
            else:
                terms.pop(exps, None)
        out = Laurent(self.vars)
        out.terms = terms
        return out

    def __neg__(self):
        out = Laurent(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = Laurent(self.vars)
            if other:
                out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        self._check(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                nc = acc.get(key, 0) + c1 * c2
                if nc:
                    acc[key] = nc
                else:
                    del acc[key]
        out = Laurent(self.vars)
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = Laurent.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Laurent)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ----------------------------------------------------------

    def _order_key(self):
        order = sorted(range(len(self.vars)), key=lambda i: _var_rank(self.vars[i]))
        return lambda exps: tuple(exps[i] for i in order)

    def sorted_terms(self):
        key = self._order_key()
        return sorted(self.terms.items(), key=lambda item: key(item[0]))

    def leading(self):
        """Highest term in canonical order: (exponents, coefficient)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = self._order_key()
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    def exponent_range(self):
        """Per-variable (min, max) exponent pairs."""
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        lo = [min(e[i] for e in self.terms) for i in range(len(self.vars))]
        hi = [max(e[i] for e in self.terms) for i in range(len(self.vars))]
        return list(zip(lo, hi))

    def degree(self, name):
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def coefficient_of(self, name, power):
        """Coefficient of name^power, a Laurent in the remaining variables."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        out = Laurent(rest)
        power = Fraction(power)
        acc = {}
        for exps, c in self.terms.items():
            if exps[i] == power:
                key = tuple(e for j, e in enumerate(exps) if j != i)
                acc[key] = acc.get(key, 0) + c
        out.terms = {k: v for k, v in acc.items() if v}
        return out

    def has_integer_exponents(self):
        return all(e.denominator == 1 for exps in self.terms for e in exps)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 0:
                    continue
                if e == 1:
                    factors.append(name)
                elif e.denominator == 1:
                    factors.append("%s^%s" % (name, e))
                else:
                    factors.append("%s^(%s)" % (name, e))
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = "%s*%s" % (mag, body)
            bits.append(("- " if coeff < 0 else "+ ") + piece)
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__

    # -- substitution -----------------------------------------------------

    def substitute(self, assignments):
        """Exact substitution of variables by signed monomials.

        `assignments` maps a variable name to (sign, {target: exponent}).
        A sign of -1 requires the substituted variable to appear with
        integer exponents only, else (-1)^k is undefined.
        """
        for name in assignments:
            if name not in self.vars:
                raise ValueError("substituting absent variable %r" % name)
        new_vars = tuple(v for v in self.vars if v not in assignments)
        targets = set(new_vars)
        for sign, mono in assignments.values():
            if sign not in (1, -1):
                raise ValueError("sign must be +-1")
            targets.update(mono)
        new_vars = tuple(sorted(targets, key=_storage_rank))
        out = Laurent(new_vars)
        acc = {}
        for exps, coeff in self.terms.items():
            new_exps = {v: Fraction(0) for v in new_vars}
            sign_total = 1
            for name, e in zip(self.vars, exps):
                if name in assignments:
                    sign, mono = assignments[name]
                    if sign == -1:
                        if e.denominator != 1:
                            raise SignedExponentError(
                                "(-1)^(%s) undefined substituting %s" % (e, name)
                            )
                        if e.numerator % 2:
                            sign_total = -sign_total
                    for tname, texp in mono.items():
                        new_exps[tname] += Fraction(texp) * e
                else:
                    new_exps[name] += e
            key = tuple(new_exps[v] for v in new_vars)
            nc = acc.get(key, 0) + sign_total * coeff
            if nc:
                acc[key] = nc
            else:
                del acc[key]
        out.terms = acc
        return out

    def rename(self, mapping):
        """Plain variable renaming (no merging allowed)."""
        new = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new)) != len(new):
            raise ValueError("rename collides variables")
        order = sorted(range(len(new)), key=lambda i: _storage_rank(new[i]))
        out = Laurent(tuple(new[i] for i in order))
        out.terms = {
            tuple(exps[i] for i in order): c for exps, c in self.terms.items()
        }
        return out


def exact_divide(num, den):
    """Quotient num/den with zero remainder, else InexactDivisionError.

    Leading-term elimination in the canonical order; every division in the
    engine is exact by theory, so a remainder always signals a bug.  The
    candidate quotient exponents are boxed by the factorization bounds
    min(num)-min(den) .. max(num)-max(den) per variable, which makes
    non-divisibility detection terminate.
    """
    if not isinstance(num, Laurent) or not isinstance(den, Laurent):
        raise TypeError("exact_divide wants Laurent arguments")
    if num.vars != den.vars:
        raise ValueError("variable mismatch in division")
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return Laurent.zero(num.vars)
    nrange = num.exponent_range()
    drange = den.exponent_range()
    box = [(nl - dl, nh - dh) for (nl, nh), (dl, dh) in zip(nrange, drange)]
    lead_exps, lead_coeff = den.leading()
    quotient = {}
    rem = num
    while rem:
        rexps, rcoeff = rem.leading()
        qexps = tuple(a - b for a, b in zip(rexps, lead_exps))
        if rcoeff % lead_coeff or any(
            not (lo <= e <= hi) for e, (lo, hi) in zip(qexps, box)
        ):
            raise InexactDivisionError("inexact polynomial division", rem)
        qc = rcoeff // lead_coeff
        quotient[qexps] = qc
        piece = Laurent(num.vars)
        piece.terms = {qexps: qc}
        rem = rem - piece * den
    out = Laurent(num.vars)
    out.terms = quotient
    return out


def tilde_normalize(p):
    """Divide out the per-variable lowest monomial; return (result, extracted).

    The extracted part is a {variable: exponent} dict.  Whether the result
    has nonnegative exponents and unit constant term is the caller's claim
    to assert, not enforced here.
    """
    if not p:
        raise ValueError("cannot tilde-normalize zero")
    mins = [lo for lo, _ in p.exponent_range()]
    out = Laurent(p.vars)
    out.terms = {
        tuple(e - m for e, m in zip(exps, mins)): c for exps, c in p.terms.items()
    }
    return out, dict(zip(p.vars, mins))


# ---------------------------------------------------------------------------
# symbolic-rank exponents


class SymExponent(NamedTuple):
    """q-exponent of the shape e2*N^2 + e1*N + e0 + em1/N with exact parts."""

    e2: Fraction
    e1: Fraction
    e0: Fraction
    em1: Fraction

    @classmethod
    def make(cls, e2=0, e1=0, e0=0, em1=0):
        return cls(Fraction(e2), Fraction(e1), Fraction(e0), Fraction(em1))

    def __add__(self, other):
        return SymExponent(
            self.e2 + other.e2,
            self.e1 + other.e1,
            self.e0 + other.e0,
            self.em1 + other.em1,
        )

    def __neg__(self):
        return SymExponent(-self.e2, -self.e1, -self.e0, -self.em1)

    def scale(self, f):
        f = Fraction(f)
        return SymExponent(self.e2 * f, self.e1 * f, self.e0 * f, self.em1 * f)

    def is_rank_free(self):
        return self.e2 == 0 and self.em1 == 0

    def at_rank(self, N):
        return self.e2 * N * N + self.e1 * N + self.e0 + Fraction(self.em1, N)

    def render(self):
        bits = []
        for coeff, sym in (
            (self.e2, "N^2"),
            (self.e1, "N"),
            (self.e0, ""),
            (self.em1, "/N"),
        ):
            if not coeff:
                continue
            if sym == "/N":
                bits.append("%s/N" % coeff)
            elif sym:
                bits.append(("%s*%s" % (coeff, sym)) if abs(coeff) != 1 else
                            ("%s%s" % ("-" if coeff < 0 else "", sym)))
            else:
                bits.append(str(coeff))
        if not bits:
            return "0"
        text = " + ".join(bits).replace("+ -", "- ")
        return text


SYM_ZERO = SymExponent.make()


class SymMonomial(NamedTuple):
    """A signed q-power with symbolic-rank exponent: sign * q^(exponent)."""

    sign: int
    exponent: SymExponent

    @classmethod
    def one(cls):
        return cls(1, SYM_ZERO)

    def __mul__(self, other):
        return SymMonomial(self.sign * other.sign, self.exponent + other.exponent)

    def power(self, f):
        f = Fraction(f)
        if self.sign == -1:
            if f.denominator != 1:
                raise SignedExponentError("(-1)^(%s) undefined" % f)
            sign = -1 if f.numerator % 2 else 1
        else:
            sign = 1
        return SymMonomial(sign, self.exponent.scale(f))

    def render(self):
        """Human form with q^N written as a: sign a^{e1} q^{e0 + em1/N}."""
        e = self.exponent
        bits = []
        if e.e2:
            bits.append("q^(%s*N^2)" % e.e2)
        if e.e1:
            bits.append("a" if e.e1 == 1 else "a^%s" % _fmt_frac(e.e1))
        if e.em1:
            inner = []
            if e.e0:
                inner.append(str(e.e0))
            inner.append("%s/N" % e.em1)
            bits.append("q^(%s)" % " + ".join(inner).replace("+ -", "- "))
        elif e.e0:
            bits.append("q" if e.e0 == 1 else "q^%s" % _fmt_frac(e.e0))
        body = "*".join(bits) if bits else "1"
        return "-" + body if self.sign < 0 else body


def _fmt_frac(f):
    return str(f) if f.denominator == 1 and f >= 0 else "(%s)" % f


def sym_to_qa(mono):
    """Lower a rank-free symbolic monomial into the (q, a) ring.

    Exponent e1*N + e0 becomes a^e1 q^e0.  Surviving N^2 or 1/N parts mean
    an upstream cancellation failed, which is always a bug.
    """
    e = mono.exponent
    if not e.is_rank_free():
        raise ResidualRankError(
            "exponent %s retains rank-dependent parts" % (e.render(),)
        )
    return Laurent(("q", "a"), {(e.e0, e.e1): mono.sign})


# ---------------------------------------------------------------------------
# q,a-integers (brackets)


class Bracket(NamedTuple):
    """The q,a-integer [u*N + v]."""

    u: int
    v: int

    def render(self):
        if self.u == 0:
            return "[%d]" % self.v
        npart = "N" if self.u == 1 else "%dN" % self.u
        if self.v == 0:
            return "[%s]" % npart
        return "[%s%+d]" % (npart, self.v)


UNIT_BRACKET = Bracket(0, 1)


def bracket_numerator(b):
    """a^{u/2} q^{v/2} - a^{-u/2} q^{-v/2} over (q, a)."""
    u2, v2 = Fraction(b.u, 2), Fraction(b.v, 2)
    return Laurent(("q", "a"), {(v2, u2): 1, (-v2, -u2): -1})


def bracket_to_fraction(b):
    """Numerator polynomial and the count of (q^1/2 - q^-1/2) denominators."""
    return bracket_numerator(b), 1


def eh_poly():
    """The universal bracket denominator q^{1/2} - q^{-1/2}."""
    half = Fraction(1, 2)
    return Laurent(("q", "a"), {(half, Fraction(0)): 1, (-half, Fraction(0)): -1})


def bracket_at_rank(b, N):
    """[u*N + v] as an honest quantum integer, Laurent in q^{1/2}."""
    m = b.u * N + b.v
    sign = 1
    if m < 0:
        m, sign = -m, -1
    out = Laurent(("q",))
    out.terms = {
        (Fraction(m - 1, 2) - k,): sign for k in range(m)
    }
    return out


class BracketProduct:
    """A signed monomial times a quotient of bracket multisets, canonical.

    Construction cancels identical brackets between numerator and
    denominator, discards unit brackets [1], and flips bracket signs so
    every stored bracket has positive leading part.
    """

    __slots__ = ("prefactor", "num", "den")

    def __init__(self, prefactor=None, num=(), den=()):
        sign_flips = 0
        norm_num, norm_den = [], []
        for target, source in ((norm_num, num), (norm_den, den)):
            for b in source:
                u, v = b
                if u == 0 and v == 0:
                    raise ValueError("zero bracket [0]")
                if u < 0 or (u == 0 and v < 0):
                    u, v = -u, -v
                    sign_flips += 1
                if (u, v) != (0, 1):
                    target.append(Bracket(u, v))
        num_count = _count(norm_num)
        den_count = _count(norm_den)
        for b in list(num_count):
            if b in den_count:
                k = min(num_count[b], den_count[b])
                num_count[b] -= k
                den_count[b] -= k
        pre = prefactor if prefactor is not None else SymMonomial.one()
        if sign_flips % 2:
            pre = SymMonomial(-pre.sign, pre.exponent)
        self.prefactor = pre
        self.num = tuple(
            sorted(b for b, k in num_count.items() for _ in range(k))
        )
        self.den = tuple(
            sorted(b for b, k in den_count.items() for _ in range(k))
        )

    @classmethod
    def one(cls):
        return cls()

    def __mul__(self, other):
        return BracketProduct(
            self.prefactor * other.prefactor,
            self.num + other.num,
            self.den + other.den,
        )

    def __eq__(self, other):
        return (
            isinstance(other, BracketProduct)
            and self.prefactor == other.prefactor
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.prefactor, self.num, self.den))

    def numerator_poly(self):
        out = Laurent.one(("q", "a"))
        for b in self.num:
            out = out * bracket_numerator(b)
        return out

    def denominator_poly(self):
        out = Laurent.one(("q", "a"))
        for b in self.den:
            out = out * bracket_numerator(b)
        return out

    def eh_balance(self):
        """Count of (q^1/2 - q^-1/2) factors owed to the denominator."""
        return len(self.num) - len(self.den)

    def at_rank(self, N):
        """Evaluate at a = q^N as an exact Laurent in q^{1/2}."""
        num = Laurent.one(("q",))
        for b in self.num:
            num = num * bracket_at_rank(b, N)
        for b in self.den:
            num = exact_divide(num, bracket_at_rank(b, N))
        exp = self.prefactor.exponent.at_rank(N)
        mono = Laurent(("q",), {(exp,): self.prefactor.sign})
        return num * mono

    def render(self):
        def block(brackets):
            pieces = []
            seen = []
            for b in brackets:
                if seen and seen[-1][0] == b:
                    seen[-1][1] += 1
                else:
                    seen.append([b, 1])
            for b, k in seen:
                pieces.append(b.render() + ("^%d" % k if k > 1 else ""))
            return "".join(pieces)

        pre = self.prefactor.render()
        num = block(self.num) or "1"
        text = num if pre == "1" else ("%s*%s" % (pre, num) if num != "1" else pre)
        if self.den:
            text += "/" + block(self.den)
        return text

    __repr__ = render
    __str__ = render


def _count(items):
    out = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return out


# ---------------------------------------------------------------------------
# term-file serialization


def dumps_poly(p, meta=None):
    """Serialize in the term-file format: header comments then sorted terms.

    Lines are `coeff<TAB>exp...` with one exponent column per variable in
    header order; a sha256 checksum of the term block is embedded so
    transcription damage is detected on load.
    """
    meta = dict(meta or {})
    lines = []
    body = []
    for exps, coeff in p.sorted_terms():
        body.append("\t".join([str(coeff)] + [str(e) for e in exps]))
    digest = hashlib.sha256("\n".join(body).encode()).hexdigest()
    lines.append("#vars %s" % " ".join(p.vars))
    for key in sorted(meta):
        lines.append("#%s %s" % (key, meta[key]))
    lines.append("#checksum sha256:%s" % digest)
    lines.extend(body)
    return "\n".join(lines) + "\n"


def loads_poly(text):
    """Parse the term-file format; returns (Laurent, metadata dict)."""
    vars = None
    meta = {}
    body = []
    terms = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(" ")
            if key == "vars":
                vars = tuple(value.split())
            else:
                meta[key] = value
            continue
        if vars is None:
            raise ValueError("term line before #vars header")
        body.append(line)
        cells = line.split("\t")
        if len(cells) != len(vars) + 1:
            raise ValueError("bad term line: %r" % line)
        exps = tuple(Fraction(c) for c in cells[1:])
        terms[exps] = terms.get(exps, 0) + int(cells[0])
    if vars is None:
        raise ValueError("missing #vars header")
    checksum = meta.pop("checksum", None)
    if checksum:
        digest = hashlib.sha256("\n".join(body).encode()).hexdigest()
        if checksum != "sha256:%s" % digest:
            raise ValueError("checksum mismatch: file is damaged")
        meta["checksum"] = checksum
    return Laurent(vars, terms), meta


# ---------------------------------------------------------------------------
# expression parsing (readable expected values in tests and fixture building)


class _ExprParser:
    def __init__(self, text, vars):
        self.text = text
        self.pos = 0
        self.vars = tuple(vars)

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self):
        ch = self.peek()
        sign = 1
        while ch in "+-":
            if ch == "-":
                sign = -sign
            self.pos += 1
            ch = self.peek()
        value = self.term() * sign
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.factor()
            elif ch == "/":
                self.pos += 1
                value = exact_divide(value, self.factor())
            else:
                return value

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            power = self.exponent()
            if power.denominator != 1:
                if len(base.terms) != 1:
                    raise ValueError("fractional power of a non-monomial")
                ((exps, coeff),) = base.terms.items()
                if coeff != 1:
                    raise ValueError("fractional power of signed monomial")
                return Laurent(
                    base.vars, {tuple(e * power for e in exps): 1}
                )
            n = power.numerator
            if n >= 0:
                return base**n
            if len(base.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((exps, coeff),) = base.terms.items()
            if abs(coeff) != 1:
                raise ValueError("negative power with non-unit coefficient")
            return Laurent(
                base.vars, {tuple(e * n for e in exps): coeff if n % 2 else 1}
            )
        return base

    def exponent(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.number_fraction()
            if self.peek() != ")":
                raise ValueError("unclosed exponent parenthesis")
            self.pos += 1
            return value
        return self.number_fraction()

    def number_fraction(self):
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            return Fraction(sign * num, self.integer())
        return Fraction(sign * num)

    def integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError("expected integer at %d" % start)
        return int(self.text[start : self.pos])

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise ValueError("unbalanced parentheses")
            self.pos += 1
            return value
        if ch.isdigit():
            return Laurent(self.vars, {(Fraction(0),) * len(self.vars): self.integer()})
        if ch.isalpha():
            name = ch
            self.pos += 1
            if name not in self.vars:
                raise ValueError("unknown variable %r" % name)
            return Laurent.var(self.vars, name)
        raise ValueError("unexpected character %r at %d" % (ch, self.pos))


def parse_expr(text, vars=("q", "t", "a")):
    """Parse an explicit expression like '1 + q*t - a^2*q^(1/2)'."""
    parser = _ExprParser(text, vars)
    value = parser.expr()
    if parser.peek():
        raise ValueError("trailing input at %d: %r" % (parser.pos, text[parser.pos :]))
    return value
