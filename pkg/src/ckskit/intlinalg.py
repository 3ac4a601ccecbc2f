"""Exact integer linear algebra.

Dense matrices are plain lists of lists of Python ints.  Everything here is
exact: Smith normal form with unimodular transforms, ranks over Q via
fraction-free elimination, cochain-complex cohomology (free rank + torsion
invariant factors), and direct-sum splitting certificates for sublattices
of Z^n.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAComplex


# ---------------------------------------------------------------------------
# basic dense-matrix helpers

def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_eq(a, b):
    return a == b


def is_zero_matrix(a):
    return all(all(x == 0 for x in row) for row in a)


def det(a):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a):
    """Rank over Q, by Gaussian elimination on Fractions."""
    if not a or not a[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] / inv
                for j in range(c, cols):
                    m[i][j] -= f * m[r][j]
        r += 1
        if r == rows:
            break
    return r


def solve_exact(a, b):
    """Solve a·x = b over Q for square nonsingular a; returns Fractions.

    Raises ValueError when the system is singular or inconsistent.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("singular system")
        m[c], m[piv] = m[piv], m[c]
        inv = m[c][c]
        for j in range(c, n + 1):
            m[c][j] /= inv
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                for j in range(c, n + 1):
                    m[i][j] -= f * m[c][j]
    return [m[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass
class SmithForm:
    """U·A·V = D with U, V unimodular and D = diag(d1 | d2 | ...)."""
    U: list
    D: list
    V: list
    rank: int
    invariant_factors: list

    def verify(self, a):
        return matmul(matmul(self.U, a), self.V) == self.D \
            and abs(det(self.U)) == 1 and abs(det(self.V)) == 1


def _nearest_quotient(x, y):
    """Quotient q minimizing |x - q*y| (round-to-nearest division)."""
    q, r = divmod(x, y)
    # r has the sign of y, so bumping q by one always flips r to the
    # shorter representative r - y
    if 2 * abs(r) > abs(y):
        q += 1
    return q


def smith_normal_form(a):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Clears each pivot column/row by repeatedly reducing the largest
    remaining entry by the second largest (round-to-nearest quotients),
    which keeps the multipliers near 1 and bounds intermediate entry
    growth; naive minimal-pivot elimination blows up exponentially on
    random matrices with large entries.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [row[:] for row in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, c):
        # row dst += c * row src
        drow, srow = d[dst], d[src]
        for j in range(cols):
            drow[j] += c * srow[j]
        urow, usrc = u[dst], u[src]
        for j in range(rows):
            urow[j] += c * usrc[j]

    def addmul_col(dst, src, c):
        for row in d:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    def clear_column(t):
        # reduce rows t..end until column t has a single nonzero, then
        # move that entry (the column gcd) onto the diagonal
        while True:
            live = sorted((i for i in range(t, rows) if d[i][t]),
                          key=lambda i: abs(d[i][t]), reverse=True)
            if len(live) < 2:
                break
            i1, i2 = live[0], live[1]
            addmul_row(i1, i2, -_nearest_quotient(d[i1][t], d[i2][t]))
        for i in range(t, rows):
            if d[i][t]:
                if i != t:
                    swap_rows(t, i)
                break

    def clear_row(t):
        while True:
            live = sorted((j for j in range(t, cols) if d[t][j]),
                          key=lambda j: abs(d[t][j]), reverse=True)
            if len(live) < 2:
                break
            j1, j2 = live[0], live[1]
            addmul_col(j1, j2, -_nearest_quotient(d[t][j1], d[t][j2]))
        for j in range(t, cols):
            if d[t][j]:
                if j != t:
                    swap_cols(t, j)
                break

    t = 0
    limit = min(rows, cols)
    while t < limit:
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = d[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        # gather the column gcd onto the diagonal; once it also divides
        # the pivot row, exact-division column ops finish the stage
        # without disturbing the cleared column.  Otherwise fold the row
        # gcd in (strictly shrinking the pivot) and start over.
        while True:
            clear_column(t)
            p = d[t][t]
            if all(d[t][j] % p == 0 for j in range(t + 1, cols)):
                for j in range(t + 1, cols):
                    if d[t][j]:
                        addmul_col(j, t, -(d[t][j] // p))
                break
            clear_row(t)
        # enforce the divisibility chain: d[t][t] must divide the rest
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            addmul_row(t, bad, 1)
            continue  # redo elimination at the same t
        if d[t][t] < 0:
            negate_row(t)
        t += 1

    diag = [d[i][i] for i in range(min(rows, cols)) if d[i][i] != 0]
    return SmithForm(U=u, D=d, V=v, rank=len(diag), invariant_factors=diag)


# ---------------------------------------------------------------------------
# cochain complexes

class CochainComplex:
    """Finitely many free Z-modules with integer differentials.

    bases: dict degree -> list of hashable basis labels
    diffs: dict degree n -> matrix of d_n: C^n -> C^{n+1}
           (shape |C^{n+1}| x |C^n|; omitted when either side is zero)
    """

    def __init__(self, bases, diffs, check=True):
        self.bases = {n: list(labels) for n, labels in bases.items() if labels}
        self.diffs = {}
        for n, m in diffs.items():
            if m and m[0] and not is_zero_matrix(m):
                self.diffs[n] = m
        if check:
            self._check_shapes()
            self._check_d2()

    def dim(self, n):
        return len(self.bases.get(n, ()))

    def degrees(self):
        return sorted(self.bases)

    def diff(self, n):
        m = self.diffs.get(n)
        if m is not None:
            return m
        return zeros(self.dim(n + 1), self.dim(n))

    def _check_shapes(self):
        for n, m in self.diffs.items():
            if len(m) != self.dim(n + 1) or (m and len(m[0]) != self.dim(n)):
                raise ValueError(f"differential at degree {n} has wrong shape")

    def _check_d2(self):
        for n in self.diffs:
            if (n + 1) in self.diffs:
                if not is_zero_matrix(matmul(self.diffs[n + 1], self.diffs[n])):
                    raise NotAComplex(f"d^2 != 0 at degree {n}")

    def cohomology(self):
        """Per-degree (free rank, torsion invariant factors > 1)."""
        out = {}
        rank_cache = {}

        def rk(n):
            if n not in rank_cache:
                rank_cache[n] = rank(self.diffs[n]) if n in self.diffs else 0
            return rank_cache[n]

        for n in self.degrees():
            free = self.dim(n) - rk(n) - rk(n - 1)
            torsion = []
            if (n - 1) in self.diffs:
                snf = smith_normal_form(self.diffs[n - 1])
                torsion = [x for x in snf.invariant_factors if x > 1]
            out[n] = (free, torsion)
        return out


def cohomology(complex_):
    return complex_.cohomology()


def verify_direct_sum(ambient_rank, image_generators, complement_basis):
    """Certify Z^ambient = (column span of image_generators) + complement.

    Both arguments are matrices whose columns live in Z^ambient.  True iff
    the concatenated columns span Z^ambient, all invariant factors are 1,
    and the two ranks add up to the ambient rank (trivial intersection,
    index one).
    """
    cols_a = len(image_generators[0]) if image_generators and image_generators[0] else 0
    cols_b = len(complement_basis[0]) if complement_basis and complement_basis[0] else 0
    if ambient_rank == 0:
        return cols_a == 0 or is_zero_matrix(image_generators)
    stacked = [
        (image_generators[i] if cols_a else []) + (complement_basis[i] if cols_b else [])
        for i in range(ambient_rank)
    ]
    if cols_a + cols_b == 0:
        return False
    snf = smith_normal_form(stacked)
    if snf.rank != ambient_rank:
        return False
    if any(x != 1 for x in snf.invariant_factors):
        return False
    ra = rank(image_generators) if cols_a else 0
    rb = rank(complement_basis) if cols_b else 0
    return ra + rb == ambient_rank
