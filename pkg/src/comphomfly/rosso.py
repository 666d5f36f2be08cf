"""The composite torus-knot engine.

Assembles normalized and unnormalized HOMFLY-PT polynomials of torus knots
from three symbolic ingredients: braiding eigenvalues with rank-dependent
exponents, composite Adams coefficients, and stable quantum dimensions in
factored bracket form.  A separate finite-rank code path recomputes the same
invariant at a concrete rank and is used as the stabilization oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import (
    EMPTY,
    Partition,
    RankTooSmallError,
    compose_at_N,
    charge_at_N,
    kappa,
    kappa_composite,
    reduce_columns,
)
from .qexact import (
    Bracket,
    BracketProduct,
    Laurent,
    SymExponent,
    SymMonomial,
    bracket_numerator,
    exact_divide,
    eh_poly,
    sym_to_qa,
)
from .symfunc import adams_at_rank, adams_coefficients, composite_adams


@dataclass(frozen=True)
class TorusKnot:
    """The (r, s) torus knot; stored with r > s >= 1 and gcd(r, s) = 1."""

    r: int
    s: int

    def __post_init__(self):
        r, s = self.r, self.s
        if r < s:
            r, s = s, r
        if s < 1 or r < 2:
            raise ValueError("torus knot needs r >= 2, s >= 1")
        if _gcd(r, s) != 1:
            raise ValueError("(%d, %d) is a link, not a knot" % (r, s))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    @classmethod
    def parse(cls, text):
        r, _, s = text.partition(",")
        return cls(int(r), int(s))

    def __str__(self):
        return "%d,%d" % (self.r, self.s)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def braiding_eigenvalue(lam, mu):
    """Braiding eigenvalue of the composite diagram [lam, mu].

    q to the power -(kappa_[lam,mu] + c*N - c^2/N)/2 with c the rank-N box
    count; the N^2 parts cancel inside a single eigenvalue, the 1/N parts
    only after the full torus-knot combination.
    """
    kap = kappa_composite(lam, mu)
    c = charge_at_N(lam, mu)
    e2 = kap.c2 + c.c1  # c*N contributes c1 at N^2
    e1 = kap.c1 + c.c0 - c.c1 * c.c1
    e0 = kap.c0 - 2 * c.c0 * c.c1
    em1 = -c.c0 * c.c0
    exponent = SymExponent.make(e2, e1, e0, em1).scale(Fraction(-1, 2))
    return SymMonomial(1, exponent)


def quantum_dimension(beta, gamma):
    """Stable quantum dimension of [beta, gamma] as a bracket product.

    The positive-root pairs (i, j) of the rank-N root system split by the
    row regions of the composed diagram: gamma's rows on top, a flat block
    in the middle, the dual of beta at the bottom.  Head-head and tail-tail
    pairs give constant brackets, head-middle and middle-tail telescopes
    leave one bracket per box of gamma resp. beta, head-tail pairs give one
    bracket each, and middle-middle pairs cancel outright.  Every surviving
    bracket is [N + const] or a constant, independent of N.
    """
    h, t = len(gamma), len(beta)
    num, den = [], []
    for i in range(1, h + 1):
        for j in range(i + 1, h + 1):
            num.append(Bracket(0, gamma.row(i) - gamma.row(j) + j - i))
            den.append(Bracket(0, j - i))
    for rr in range(1, t + 1):
        for p in range(rr + 1, t + 1):
            num.append(Bracket(0, beta.row(rr) - beta.row(p) + p - rr))
            den.append(Bracket(0, p - rr))
    for i in range(1, h + 1):
        for p in range(1, t + 1):
            num.append(Bracket(1, gamma.row(i) + beta.row(p) + 1 - p - i))
            den.append(Bracket(1, 1 - p - i))
    for i in range(1, h + 1):
        for k in range(1, gamma.row(i) + 1):
            num.append(Bracket(1, k - t - i))
            den.append(Bracket(0, h - i + k))
    for p in range(1, t + 1):
        for k in range(1, beta.row(p) + 1):
            num.append(Bracket(1, k - p - h))
            den.append(Bracket(0, t - p + k))
    return BracketProduct(SymMonomial.one(), num, den)


@dataclass(frozen=True)
class FactoredTerm:
    """One summand of the unnormalized expansion, kept in factored form."""

    beta: Partition
    gamma: Partition
    coefficient: int
    twist: SymMonomial  # combined eigenvalue monomial, rank parts cancelled
    dimension: BracketProduct

    def render(self):
        return "%d * %s * %s  [%s|%s]" % (
            self.coefficient,
            self.twist.render(),
            self.dimension.render(),
            self.beta,
            self.gamma,
        )


@dataclass
class InvariantResult:
    """Engine output: normalized polynomial plus the factored expansion.

    `numerator`/`denominator` hold the unnormalized value as an exact
    fraction over (q, a); normalized * dim == that fraction identically.
    """

    knot: TorusKnot
    lam: Partition
    mu: Partition
    normalized: Laurent
    terms: list = field(default_factory=list)
    numerator: Laurent = None
    denominator: Laurent = None
    diagnostics: list = field(default_factory=list)

    def unnormalized_fraction(self):
        return self.numerator, self.denominator

    def diagnostics_text(self):
        lines = [
            "knot %s color %s|%s: %d terms" % (self.knot, self.lam, self.mu, len(self.terms))
        ]
        lines.extend(self.diagnostics)
        return "\n".join(lines)


def _sorted_keys(expansion):
    return sorted(expansion, key=lambda bg: (bg[0].rows, bg[1].rows), reverse=True)


def _assemble(knot, lam, mu, expansion, theta_color):
    """Common assembly: twist each term, expand over a common denominator,
    and divide out the color's quantum dimension."""
    r, s = knot.r, knot.s
    power = Fraction(r, s)  # the fractional eigenvalue power max/min
    pref = theta_color.power(-r * s)
    terms = []
    diagnostics = []
    for beta, gamma in _sorted_keys(expansion):
        coeff = expansion[(beta, gamma)]
        twist = pref * braiding_eigenvalue(beta, gamma).power(power)
        # rank-cancellation: N^2 and 1/N parts must vanish term by term
        diagnostics.append(
            "term %s|%s c=%d exponent %s" % (beta, gamma, coeff, twist.exponent.render())
        )
        terms.append(
            FactoredTerm(beta, gamma, coeff, twist, quantum_dimension(beta, gamma))
        )

    common = {}
    for term in terms:
        seen = {}
        for b in term.dimension.den:
            seen[b] = seen.get(b, 0) + 1
        for b, k in seen.items():
            common[b] = max(common.get(b, 0), k)
    eh_max = max((term.dimension.eh_balance() for term in terms), default=0)

    total = Laurent.zero(("q", "a"))
    eh = eh_poly()
    for term in terms:
        piece = sym_to_qa(term.twist) * term.coefficient
        piece = piece * term.dimension.numerator_poly()
        missing = dict(common)
        for b in term.dimension.den:
            missing[b] -= 1
        for b, k in missing.items():
            for _ in range(k):
                piece = piece * bracket_numerator(b)
        for _ in range(eh_max - term.dimension.eh_balance()):
            piece = piece * eh
        total = total + piece

    bracket_common = Laurent.one(("q", "a"))
    for b, k in sorted(common.items()):
        for _ in range(k):
            bracket_common = bracket_common * bracket_numerator(b)
    denominator = bracket_common * eh**eh_max

    # H = (total / denominator) / dim_color, with dim_color itself a
    # bracket fraction carrying eh_balance() unit denominators.
    color_dim = quantum_dimension(lam, mu)
    num = total * color_dim.denominator_poly()
    den = bracket_common * color_dim.numerator_poly()
    balance = eh_max - color_dim.eh_balance()
    if balance >= 0:
        den = den * eh**balance
    else:
        num = num * eh ** (-balance)
    normalized = exact_divide(num, den)
    assert normalized.has_integer_exponents(), "normalized output must be integral"
    return InvariantResult(
        knot=knot,
        lam=lam,
        mu=mu,
        normalized=normalized,
        terms=terms,
        numerator=total,
        denominator=denominator,
        diagnostics=diagnostics,
    )


def composite_homfly(knot, lam, mu):
    """Normalized composite HOMFLY-PT polynomial of a torus knot.

    Adams expansion runs in the min(r, s) direction with fractional
    eigenvalue power max/min; the two directions agree, and the small one
    keeps the expansion shallow.
    """
    expansion = composite_adams(lam, mu, knot.s)
    return _assemble(knot, lam, mu, expansion, braiding_eigenvalue(lam, mu))


def classical_homfly(knot, lam):
    """Single-diagram HOMFLY-PT via the classical expansion.

    Kept as an independent code path; collapsing composite_homfly with an
    empty first slot must reproduce it term for term (tested).
    """
    expansion = {
        (EMPTY, nu): c for nu, c in adams_coefficients(lam, knot.s).items()
    }
    return _assemble(knot, EMPTY, lam, expansion, braiding_eigenvalue(EMPTY, lam))


# ---------------------------------------------------------------------------
# finite-rank oracle


def _theta_exponent_at_rank(shape, N):
    """Exponent of the rank-N braiding eigenvalue of a single diagram."""
    n = shape.size()
    return Fraction(-(kappa(shape) + n * N), 2) + Fraction(n * n, 2 * N)


def qdim_at_rank(shape, N):
    """Quantum dimension at rank N, an exact Laurent in q^{1/2}.

    Direct product over positive-root pairs; equal integers between
    numerator and denominator cancel before any polynomial work.
    """
    if len(shape) > N:
        raise RankTooSmallError("%s does not fit in rank %d" % (shape, N))
    num, den = {}, {}
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            a = shape.row(i) - shape.row(j) + j - i
            b = j - i
            num[a] = num.get(a, 0) + 1
            den[b] = den.get(b, 0) + 1
    for m in list(num):
        if m in den:
            k = min(num[m], den[m])
            num[m] -= k
            den[m] -= k
    poly = Laurent.one(("q",))
    for m, k in num.items():
        for _ in range(k):
            poly = poly * _quantum_integer(m)
    for m, k in den.items():
        for _ in range(k):
            poly = exact_divide(poly, _quantum_integer(m))
    return poly


def _quantum_integer(m):
    out = Laurent(("q",))
    out.terms = {(Fraction(m - 1, 2) - k,): 1 for k in range(m)}
    return out


def finite_N_oracle(knot, lam, mu, N):
    """Normalized invariant of the materialized diagram at concrete rank N.

    Fully finite computation: the rank-N Adams expansion (character route),
    concrete eigenvalue exponents, and direct Weyl-product dimensions, with
    a = q^N built in.  Shares no code with the symbolic engine's expansion,
    eigenvalue, or dimension steps.
    """
    if N < len(lam) + len(mu):
        raise RankTooSmallError(
            "rank %d < %d for [%s|%s]" % (N, len(lam) + len(mu), lam, mu)
        )
    r, s = knot.r, knot.s
    power = Fraction(r, s)
    zeta = compose_at_N(lam, mu, N)
    if not zeta:
        return Laurent.one(("q",))
    total = Laurent.zero(("q",))
    for nu, coeff in adams_at_rank(zeta, knot.s, N).items():
        reduced = reduce_columns(nu, N)
        exponent = _theta_exponent_at_rank(nu, N) * power
        mono = Laurent(("q",), {(exponent,): coeff})
        total = total + mono * qdim_at_rank(reduced, N)
    lead = Laurent(
        ("q",), {(-_theta_exponent_at_rank(zeta, N) * r * s,): 1}
    )
    return exact_divide(total * lead, qdim_at_rank(zeta, N))
