"""Symmetric-function combinatorics over exact integers.

Littlewood-Richardson coefficients by tableau counting, symmetric-group
characters by the Murnaghan-Nakayama recursion, Adams (plethysm-by-power-sum)
coefficients, and the composite-character expansions that drive the
torus-knot engine.  Everything is integer-exact; partitions are the
`partitions.Partition` type throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    EMPTY,
    Partition,
    conjugate,
    dual_at_N,
    reduce_columns,
)


class SizeMismatchError(ValueError):
    """Character evaluated on a class of the wrong symmetric group."""


# ---------------------------------------------------------------------------
# partition enumeration


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n with parts bounded by max_part, largest-first."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + rest.rows))
    return tuple(out)


@lru_cache(maxsize=None)
def subpartitions(lam):
    """All partitions whose diagram fits inside lam."""
    if not lam:
        return (EMPTY,)
    out = set()

    def fill(i, prev, acc):
        out.add(Partition(acc))
        if i >= len(lam):
            return
        for r in range(1, min(lam.rows[i], prev) + 1):
            fill(i + 1, r, acc + (r,))

    fill(0, lam.width, ())
    return tuple(sorted(out, key=lambda p: p.rows))


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule


@lru_cache(maxsize=None)
def lr_coefficient(lam, mu, nu):
    """N^nu_{lam,mu}: LR skew tableaux of shape nu/lam and content mu.

    Cells are filled right-to-left along rows, top to bottom, so the
    lattice condition on the reverse reading word can be enforced as the
    filling proceeds.
    """
    if nu.size() != lam.size() + mu.size():
        return 0
    if not nu.contains(lam):
        return 0
    if not mu:
        return 1 if nu == lam else 0
    if mu.size() > lam.size():
        # symmetric in lam, mu; put the smaller one as the content
        return lr_coefficient(mu, lam, nu)

    nrows = len(nu)
    cells = []
    for i in range(1, nrows + 1):
        for j in range(nu.row(i), lam.row(i), -1):
            cells.append((i, j))
    values = {}
    counts = [0] * (len(mu) + 1)

    def place(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        for v in range(1, len(mu) + 1):
            if counts[v] >= mu.rows[v - 1]:
                continue
            if v >= 2 and counts[v] >= counts[v - 1]:
                continue  # lattice word
            right = values.get((i, j + 1))
            if right is not None and v > right:
                continue  # rows weakly increase
            above = values.get((i - 1, j))
            if above is not None and v <= above:
                continue  # columns strictly increase
            values[(i, j)] = v
            counts[v] += 1
            total += place(pos + 1)
            counts[v] -= 1
            del values[(i, j)]
        return total

    return place(0)


@lru_cache(maxsize=None)
def schur_product(lam, mu):
    """Expansion of s_lam * s_mu as {nu: N^nu_{lam,mu}}, zeros omitted."""
    out = {}
    target = lam.size() + mu.size()
    maxlen = len(lam) + len(mu)

    def grow(i, prev, acc, remaining):
        if remaining == 0:
            nu = Partition(acc)
            c = lr_coefficient(lam, mu, nu)
            if c:
                out[nu] = c
            return
        if i > maxlen:
            return
        low = max(1, lam.row(i))
        hi = min(prev, lam.row(i) + mu.width, remaining)
        for r in range(hi, low - 1, -1):
            grow(i + 1, r, acc + (r,), remaining - r)

    grow(1, target, (), target)
    return dict(out)


@lru_cache(maxsize=None)
def expansion_pairs(eta):
    """All (beta, alpha) with N^eta_{beta,alpha} != 0, as a coefficient dict."""
    out = {}
    for alpha in subpartitions(eta):
        for beta in subpartitions(eta):
            if beta.size() + alpha.size() != eta.size():
                continue
            c = lr_coefficient(beta, alpha, eta)
            if c:
                out[(beta, alpha)] = c
    return dict(out)


# ---------------------------------------------------------------------------
# symmetric-group characters (Murnaghan-Nakayama)


class CharacterCache:
    """Memo table for character values keyed by (shape, class).

    Values are pure functions of the key, so inserts are idempotent and
    concurrent lookups/inserts are safe; a stale miss only recomputes.
    """

    def __init__(self):
        self._table = {}

    def __len__(self):
        return len(self._table)

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value):
        self._table[key] = value
        return value

    def evict(self, keys):
        for key in keys:
            self._table.pop(key, None)

    def keys(self):
        return list(self._table)

    def clear(self):
        self._table.clear()


character_cache = CharacterCache()


def _beta_set(lam, slots):
    return tuple(lam.row(i) + slots - i for i in range(1, slots + 1))


def _strip_removals(lam, k):
    """All ways to remove a border strip of k boxes: (smaller shape, sign)."""
    slots = len(lam) + 1
    beta = set(_beta_set(lam, slots))
    out = []
    for b in sorted(beta):
        if b - k < 0 or b - k in beta:
            continue
        height = sum(1 for c in beta if b - k < c < b)
        new = sorted(beta - {b} | {b - k})
        rows = [x - i for i, x in enumerate(new)]
        out.append((Partition(r for r in reversed(rows) if r), (-1) ** height))
    return out


def sym_character(lam, mu):
    """chi^lam evaluated on the conjugacy class of cycle type mu."""
    if lam.size() != mu.size():
        raise SizeMismatchError("|%s| != |%s|" % (lam, mu))
    return _mn(lam, mu.rows)


def _mn(lam, parts):
    if not parts:
        return 1 if not lam else 0
    key = (lam, parts)
    hit = character_cache.get(key)
    if hit is not None:
        return hit
    k, rest = parts[0], parts[1:]
    value = sum(sign * _mn(shape, rest) for shape, sign in _strip_removals(lam, k))
    return character_cache.put(key, value)


def zclass(mu):
    """Centralizer order z_mu = prod_i i^{m_i} m_i!."""
    z = 1
    mults = {}
    for part in mu.rows:
        mults[part] = mults.get(part, 0) + 1
    for part, m in mults.items():
        z *= part**m * math.factorial(m)
    return z


def conjugacy_size(mu):
    """Number of permutations of cycle type mu: n!/z_mu."""
    return math.factorial(mu.size()) // zclass(mu)


# ---------------------------------------------------------------------------
# Adams operation (plethysm by a power sum)


def _stretch(mu, r):
    return Partition(sorted((r * part for part in mu.rows), reverse=True))


@lru_cache(maxsize=None)
def adams_coefficients(lam, r):
    """Schur expansion of s_lam with every variable raised to the r-th power.

    Coefficient of s_nu is sum over mu |- |lam| of
    chi^lam(C_mu) * chi^nu(C_{r*mu}) / z_mu; the z_mu denominator is the
    one that survives the sanity checks (see the project notes).
    """
    if r < 1:
        raise ValueError("Adams index must be >= 1")
    if not lam:
        return {EMPTY: 1}
    if r == 1:
        return {lam: 1}
    n = lam.size()
    weights = []
    for mu in partitions_of(n):
        chi = sym_character(lam, mu)
        if chi:
            weights.append((Fraction(chi, zclass(mu)), _stretch(mu, r)))
    out = {}
    for nu in partitions_of(r * n):
        total = sum(w * sym_character(nu, rmu) for w, rmu in weights)
        if total:
            assert total.denominator == 1, "non-integer Adams coefficient"
            out[nu] = int(total)
    return dict(out)


# ---------------------------------------------------------------------------
# composite characters


@lru_cache(maxsize=None)
def composite_character_expansion(lam, mu):
    """Coefficients of s_nu(x) s_xi(y) in the universal composite character.

    Sum over tau of (-1)^{|tau|} N^lam_{nu,tau} N^mu_{xi,tau'} with tau' the
    conjugate of tau.  The conjugate is forced by the inversion identity
    with `composite_product_expansion` (tested) and by every finite-rank
    projection; without it the two transforms are not mutually inverse.
    """
    out = {}
    for tau in subpartitions(lam):
        tconj = conjugate(tau)
        if not mu.contains(tconj):
            continue
        sign = -1 if tau.size() % 2 else 1
        for nu in subpartitions(lam):
            if nu.size() != lam.size() - tau.size():
                continue
            c1 = lr_coefficient(nu, tau, lam)
            if not c1:
                continue
            for xi in subpartitions(mu):
                if xi.size() != mu.size() - tau.size():
                    continue
                c2 = lr_coefficient(xi, tconj, mu)
                if not c2:
                    continue
                key = (nu, xi)
                out[key] = out.get(key, 0) + sign * c1 * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def composite_product_expansion(eta, delta):
    """Expansion of s_eta(x) s_delta(y) over composite characters s_[beta,gamma]."""
    out = {}
    for (beta, alpha), c1 in expansion_pairs(eta).items():
        for gamma in subpartitions(delta):
            if gamma.size() != delta.size() - alpha.size():
                continue
            c2 = lr_coefficient(gamma, alpha, delta)
            if c2:
                key = (beta, gamma)
                out[key] = out.get(key, 0) + c1 * c2
    return dict(out)


@lru_cache(maxsize=None)
def composite_adams(lam, mu, r):
    """Composite-character expansion of the r-th Adams image of s_[lam,mu].

    Chains the composite character expansion, the ordinary Adams expansion
    on each tensor slot, and the product expansion back into composite
    characters; all six summation indices have finite range.
    """
    if r < 1:
        raise ValueError("Adams index must be >= 1")
    acc = {}
    for (nu, xi), c in composite_character_expansion(lam, mu).items():
        for eta, a1 in adams_coefficients(nu, r).items():
            pairs = expansion_pairs(eta)
            for delta, a2 in adams_coefficients(xi, r).items():
                for (beta, alpha), n1 in pairs.items():
                    for gamma in subpartitions(delta):
                        if gamma.size() != delta.size() - alpha.size():
                            continue
                        n2 = lr_coefficient(gamma, alpha, delta)
                        if not n2:
                            continue
                        key = (beta, gamma)
                        acc[key] = acc.get(key, 0) + c * a1 * a2 * n1 * n2
    return {k: v for k, v in acc.items() if v}


def format_expansion(expansion):
    """Serialize an expansion as sorted `key<TAB>coefficient` lines.

    Keys may be partitions or composite pairs; ordering is descending on
    the row tuples, matching the printed tables.
    """

    def key_of(item):
        if isinstance(item, Partition):
            return (item.rows,)
        return tuple(part.rows for part in item)

    def text_of(item):
        if isinstance(item, Partition):
            return str(item)
        return "|".join(str(part) for part in item)

    lines = []
    for item in sorted(expansion, key=key_of, reverse=True):
        lines.append("%s\t%d" % (text_of(item), expansion[item]))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# finite-rank expansions (the independent route used by the oracles)


def _strip_additions(lam, k, slots):
    """All ways to add a border strip of k boxes within `slots` rows."""
    beta = set(_beta_set(lam, slots))
    out = []
    for b in sorted(beta):
        if b + k in beta:
            continue
        height = sum(1 for c in beta if b < c < b + k)
        new = sorted(beta - {b} | {b + k})
        rows = [x - i for i, x in enumerate(new)]
        out.append((Partition(r for r in reversed(rows) if r), (-1) ** height))
    return out


def _pk_times_schur(expansion, k, max_rows):
    out = {}
    for nu, coeff in expansion.items():
        for shape, sign in _strip_additions(nu, k, max_rows):
            out[shape] = out.get(shape, 0) + sign * coeff
    return {key: v for key, v in out.items() if v}


@lru_cache(maxsize=None)
def power_schur_expansion(parts, max_rows):
    """Schur expansion of p_{parts} keeping at most max_rows rows.

    Dropping longer shapes is sound: border strips only grow rows, so
    shapes past the cap can never shrink back under it.
    """
    if not parts:
        return {EMPTY: 1}
    tail = power_schur_expansion(parts[1:], max_rows)
    return _pk_times_schur(tail, parts[0], max_rows)


def adams_at_rank(zeta, r, max_rows):
    """Schur expansion of s_zeta(x^r) over shapes with at most max_rows rows.

    Character route: sum over classes mu of chi^zeta(mu)/z_mu p_{r*mu},
    expanded by iterated border-strip multiplication.  Independent of the
    composite-character machinery above.
    """
    acc = {}
    for mu in partitions_of(zeta.size()):
        chi = sym_character(zeta, mu)
        if not chi:
            continue
        w = Fraction(chi, zclass(mu))
        stretched = tuple(sorted((r * p for p in mu.rows), reverse=True))
        for nu, c in power_schur_expansion(stretched, max_rows).items():
            acc[nu] = acc.get(nu, Fraction(0)) + w * c
    out = {}
    for nu, c in acc.items():
        if c:
            assert c.denominator == 1, "non-integer finite-rank expansion"
            out[nu] = int(c)
    return out


def schur_product_at_rank(lam, mu, N):
    """s_lam * s_mu in the rank-N character ring, keys column-reduced."""
    out = {}
    for nu, c in schur_product(lam, mu).items():
        if len(nu) > N:
            continue
        key = reduce_columns(nu, N)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def composite_schur_at_rank(lam, mu, N):
    """Rank-N character of the universal composite character s_[lam,mu].

    The x-slot carries lam and is the dualized side, so s_nu(x) lands on
    the rank-N dual diagram of nu.  For N >= len(lam)+len(mu) this recovers
    the plain Schur function of the composed diagram, but it stays correct
    below any individual key's bound, where modification terms appear.
    """
    out = {}
    for (nu, xi), c in composite_character_expansion(lam, mu).items():
        if len(nu) > N or len(xi) > N:
            continue
        for key, k in schur_product_at_rank(dual_at_N(nu, N), xi, N).items():
            out[key] = out.get(key, 0) + c * k
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# monomial expansions (brute-force oracles and the Macdonald layer)


@lru_cache(maxsize=None)
def schur_monomials(lam, nvars):
    """Monomial expansion of s_lam in nvars variables by tableau counting."""
    if lam and len(lam) > nvars:
        return {}
    out = {}

    # row-by-row semistandard filling
    def rows_fill(i, above, acc):
        if i > len(lam):
            exps = [0] * nvars
            for row_vals in acc:
                for v in row_vals:
                    exps[v - 1] += 1
            key = tuple(exps)
            out[key] = out.get(key, 0) + 1
            return
        width = lam.row(i)

        def cell(j, prev, vals):
            if j > width:
                rows_fill(i + 1, vals, acc + (vals,))
                return
            lo = prev
            if above is not None and j <= len(above):
                lo = max(lo, above[j - 1] + 1)
            for v in range(lo, nvars + 1):
                cell(j + 1, v, vals + (v,))

        cell(1, 1, ())

    rows_fill(1, None, ())
    return dict(out)


def monomial_to_schur(monomials, nvars):
    """Rewrite a symmetric monomial dict over exponent tuples in Schur basis.

    Greedy triangular elimination on the dominance-maximal surviving
    monomial; exact for any symmetric integer input.
    """
    work = {k: v for k, v in monomials.items() if v}
    out = {}
    guard = 0
    while work:
        guard += 1
        if guard > 100000:
            raise RuntimeError("monomial_to_schur failed to terminate")
        lead = max(work, key=lambda e: tuple(sorted(e, reverse=True)))
        shape = Partition(sorted(lead, reverse=True))
        coeff = work[lead]
        out[shape] = coeff
        for mono, c in schur_monomials(shape, nvars).items():
            nv = work.get(mono, 0) - coeff * c
            if nv:
                work[mono] = nv
            else:
                work.pop(mono, None)
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def power_monomial_matrix(degree):
    """Rows: p_rho expanded over monomial symmetric functions, degree fixed.

    Returned as {rho: {mu: int}} with both indices partitions of `degree`,
    computed by explicit polynomial expansion in `degree` variables.
    """
    nvars = max(degree, 1)
    out = {}
    for rho in partitions_of(degree):
        poly = {(0,) * nvars: 1}
        for part in rho.rows:
            nxt = {}
            for exps, c in poly.items():
                for i in range(nvars):
                    key = tuple(
                        e + (part if j == i else 0) for j, e in enumerate(exps)
                    )
                    nxt[key] = nxt.get(key, 0) + c
            poly = nxt
        row = {}
        for exps, c in poly.items():
            if tuple(sorted(exps, reverse=True)) == exps:
                row[Partition(exps)] = c
        out[rho] = row
    return out


@lru_cache(maxsize=None)
def monomial_power_matrix(degree):
    """Inverse transition: m_mu written in the power-sum basis, Fractions."""
    rhos = list(partitions_of(degree))
    mat = power_monomial_matrix(degree)
    n = len(rhos)
    aug = [
        [Fraction(mat[rhos[i]].get(rhos[j], 0)) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    # aug now holds R^{-1} on the right; m = R^{-1} p reading p = R m
    out = {}
    for j, mu in enumerate(rhos):
        out[mu] = {
            rhos[i]: aug[j][n + i] for i in range(n) if aug[j][n + i]
        }
    return out


@lru_cache(maxsize=None)
def schur_in_monomials(lam):
    """Kostka row of s_lam via characters; exact integers."""
    degree = lam.size()
    if degree == 0:
        return {EMPTY: 1}
    pm = power_monomial_matrix(degree)
    acc = {}
    for rho in partitions_of(degree):
        chi = sym_character(lam, rho)
        if not chi:
            continue
        w = Fraction(chi, zclass(rho))
        for mu, c in pm[rho].items():
            acc[mu] = acc.get(mu, Fraction(0)) + w * c
    out = {}
    for mu, c in acc.items():
        if c:
            assert c.denominator == 1
            out[mu] = int(c)
    return out
