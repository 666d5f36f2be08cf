"""Young diagrams, composite diagrams, and their box statistics.

A composite diagram is an ordered pair [lambda, mu] of partitions.  At any
finite rank N >= len(lambda) + len(mu) it materializes as a single partition:
mu sits in the top rows, the rank-N dual of lambda in the bottom rows, and a
flat block of rows of length lambda_1 fills the middle.
"""

from __future__ import annotations

from fractions import Fraction


class RankTooSmallError(ValueError):
    """The finite rank N cannot hold the requested composite diagram."""


class DegreeCapError(ArithmeticError):
    """An NPolynomial operation produced degree > 2; upstream formula bug."""


class Partition:
    """A partition as a weakly decreasing tuple of positive ints.

    Canonical at construction: zeros are stripped, so structural equality
    is partition equality and instances are safe dict keys.
    """

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = tuple(int(r) for r in rows if r != 0)
        if any(r < 0 for r in rows):
            raise ValueError("negative row length: %r" % (rows,))
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError("rows not weakly decreasing: %r" % (rows,))
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def parse(cls, text):
        """Parse the text form: comma-separated rows, '' or '0' for the empty one."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        return cls(int(part) for part in text.split(","))

    # -- basic statistics ------------------------------------------------

    def size(self):
        return sum(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __bool__(self):
        return bool(self.rows)

    def row(self, i):
        """Row length with 1-based index i; zero beyond the last row."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    @property
    def width(self):
        return self.rows[0] if self.rows else 0

    def contains(self, other):
        """Containment of diagrams, row by row."""
        return all(self.row(i) >= r for i, r in enumerate(other.rows, start=1))

    def boxes(self):
        """All boxes (i, j), 1-based row i and column j."""
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, r + 1):
                yield (i, j)

    # -- hashing / ordering ----------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Partition) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other):
        return self.rows < other.rows

    def __le__(self, other):
        return self.rows <= other.rows

    def __str__(self):
        return ",".join(str(r) for r in self.rows) if self.rows else "0"

    def __repr__(self):
        return "Partition(%r)" % (self.rows,)


EMPTY = Partition()


def conjugate(lam):
    """Transpose of the diagram; an involution."""
    if not lam.rows:
        return EMPTY
    cols = [0] * lam.width
    for r in lam.rows:
        for j in range(r):
            cols[j] += 1
    return Partition(cols)


def kappa(lam):
    """Twice the content sum: sum over boxes of 2(j - i)."""
    return sum(2 * (j - i) for i, j in lam.boxes())


def join(lam, mu):
    """Componentwise maximum: the smallest diagram containing both."""
    n = max(len(lam), len(mu))
    return Partition(max(lam.row(i), mu.row(i)) for i in range(1, n + 1))


def compose_at_N(lam, mu, N):
    """Materialize the composite diagram [lam, mu] at finite rank N.

    Rows: mu_k + lam_1 on top, lam_1 in the middle, lam_1 - lam_{N+1-k} at
    the bottom; the result has at most N - 1 rows and size
    |mu| - |lam| + lam_1 * N.
    """
    if N < len(lam) + len(mu):
        raise RankTooSmallError(
            "rank %d < %d rows needed by [%s|%s]" % (N, len(lam) + len(mu), lam, mu)
        )
    head = [mu.rows[k] + lam.width for k in range(len(mu))]
    middle = [lam.width] * (N - len(lam) - len(mu))
    tail = [lam.width - lam.row(N + 1 - k) for k in range(N - len(lam) + 1, N + 1)]
    return Partition(head + middle + tail)


def dual_at_N(lam, N):
    """Rank-N dual diagram, rows lam_1 - lam_{N+1-k}.  Depends on N."""
    if N < len(lam):
        raise RankTooSmallError("rank %d < %d rows of %s" % (N, len(lam), lam))
    return Partition(lam.width - lam.row(N + 1 - k) for k in range(1, N + 1))


def reduce_columns(lam, N):
    """Strip columns of height N: the sl_N reinterpretation of the diagram.

    Requires len(lam) <= N; diagrams with more rows do not survive at rank N.
    """
    if len(lam) > N:
        raise RankTooSmallError("%s has more than %d rows" % (lam, N))
    if len(lam) < N:
        return lam
    c = lam.rows[-1]
    return Partition(r - c for r in lam.rows)


class NPolynomial:
    """Polynomial in the rank N of degree <= 2, with exact rational coefficients.

    Degree 2 suffices for every composite content sum; exceeding the cap is
    a formula bug and raises immediately.
    """

    __slots__ = ("c0", "c1", "c2")

    def __init__(self, c0=0, c1=0, c2=0):
        object.__setattr__(self, "c0", Fraction(c0))
        object.__setattr__(self, "c1", Fraction(c1))
        object.__setattr__(self, "c2", Fraction(c2))

    def __setattr__(self, name, value):
        raise AttributeError("NPolynomial is immutable")

    def __add__(self, other):
        other = _as_npoly(other)
        return NPolynomial(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    __radd__ = __add__

    def __neg__(self):
        return NPolynomial(-self.c0, -self.c1, -self.c2)

    def __sub__(self, other):
        return self + (-_as_npoly(other))

    def __mul__(self, other):
        other = _as_npoly(other)
        coeffs = [Fraction(0)] * 5
        for i, a in enumerate((self.c0, self.c1, self.c2)):
            for j, b in enumerate((other.c0, other.c1, other.c2)):
                coeffs[i + j] += a * b
        if coeffs[3] or coeffs[4]:
            raise DegreeCapError("product exceeds degree 2 in N")
        return NPolynomial(*coeffs[:3])

    __rmul__ = __mul__

    def __call__(self, N):
        return self.c0 + self.c1 * N + self.c2 * N * N

    def __eq__(self, other):
        other = _as_npoly(other)
        return (self.c0, self.c1, self.c2) == (other.c0, other.c1, other.c2)

    def __hash__(self):
        return hash((self.c0, self.c1, self.c2))

    def __repr__(self):
        return "NPolynomial(%s, %s, %s)" % (self.c0, self.c1, self.c2)

    def __str__(self):
        parts = []
        for coeff, sym in ((self.c2, "N^2"), (self.c1, "N"), (self.c0, "")):
            if coeff:
                parts.append("%s%s" % (coeff, "*" + sym if sym else ""))
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _as_npoly(x):
    if isinstance(x, NPolynomial):
        return x
    return NPolynomial(x)


def kappa_composite(lam, mu):
    """Content-sum polynomial of the composite diagram, as a function of N.

    kappa_lam + kappa_mu + N*lam_1*(lam_1+1) - lam_1*N*(N+1) + 2*lam_1*|mu|
    - 2*|lam|*(lam_1 - N); evaluating at any N >= len(lam)+len(mu) agrees
    with kappa(compose_at_N(lam, mu, N)).
    """
    l1 = lam.width
    m, n = lam.size(), mu.size()
    base = NPolynomial(kappa(lam) + kappa(mu))
    big_n = NPolynomial(0, 1)
    return (
        base
        + big_n * (l1 * (l1 + 1))
        - big_n * (big_n + 1) * l1
        + NPolynomial(2 * l1 * n)
        - (NPolynomial(l1) - big_n) * (2 * m)
    )


def charge_at_N(lam, mu):
    """Box count of the composite diagram at rank N: |mu| - |lam| + lam_1*N."""
    return NPolynomial(mu.size() - lam.size(), lam.width)


class CompositeDiagram:
    """An ordered pair [lam, mu] of partitions.

    Stored ordered; order-insensitivity of derived invariants is a tested
    property, not a type-level identification.
    """

    __slots__ = ("lam", "mu")

    def __init__(self, lam, mu):
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    def __setattr__(self, name, value):
        raise AttributeError("CompositeDiagram is immutable")

    @classmethod
    def parse(cls, text):
        """Parse 'lam|mu', each side in the partition text form."""
        left, sep, right = text.partition("|")
        if not sep:
            raise ValueError("composite diagram needs a '|': %r" % text)
        return cls(Partition.parse(left), Partition.parse(right))

    def swapped(self):
        return CompositeDiagram(self.mu, self.lam)

    def min_rank(self):
        return len(self.lam) + len(self.mu)

    def at_N(self, N):
        return compose_at_N(self.lam, self.mu, N)

    def __eq__(self, other):
        return (
            isinstance(other, CompositeDiagram)
            and (self.lam, self.mu) == (other.lam, other.mu)
        )

    def __hash__(self):
        return hash((self.lam, self.mu))

    def __str__(self):
        return "%s|%s" % (self.lam, self.mu)

    def __repr__(self):
        return "CompositeDiagram(%r, %r)" % (self.lam, self.mu)


def weight_to_partition(coeffs):
    """Fundamental-weight coordinates b_i (list, 1-based as index+1) to rows."""
    rows = []
    total = 0
    for b in reversed(list(coeffs)):
        total += b
        rows.append(total)
    return Partition(reversed([r for r in rows]))


def parse_weight(text):
    """Parse weight notation like '2w1+w3' into a Partition."""
    text = text.strip().replace(" ", "")
    if text in ("", "0"):
        return EMPTY
    coeffs = {}
    for piece in text.split("+"):
        mult, sep, idx = piece.partition("w")
        if not sep or not idx.isdigit():
            raise ValueError("bad weight term: %r" % piece)
        i = int(idx)
        coeffs[i] = coeffs.get(i, 0) + (int(mult) if mult else 1)
    top = max(coeffs)
    return weight_to_partition([coeffs.get(i, 0) for i in range(1, top + 1)])
