"""Exact dense linear algebra over Q(i): rank, nullspace, affine solve.

Matrices are immutable (tuple-of-tuples storage). Vectors are plain tuples
of GaussianRational. Rank uses fraction-free Bareiss elimination on a
denominator-cleared copy; nullspace and solve use Gauss-Jordan with the
first nonzero entry in column order as pivot, which makes every output
deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SizeMismatch
from .scalars import GR_ONE, GR_ZERO, GaussianRational


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        grid = tuple(
            tuple(x if isinstance(x, GaussianRational) else GaussianRational(Fraction(x)) for x in row)
            for row in entries
        )
        if grid and any(len(row) != len(grid[0]) for row in grid):
            raise SizeMismatch("ragged matrix rows")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]) if grid else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[GR_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n, i, j):
        """Elementary matrix E_ij of size n."""
        return cls(
            [[GR_ONE if (r, c) == (i, j) else GR_ZERO for c in range(n)] for r in range(n)]
        )

    @classmethod
    def diag(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else GR_ZERO for j in range(n)] for i in range(n)])

    # -- arithmetic -----------------------------------------------------

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatch(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.entries])

    def __mul__(self, scalar):
        return Matrix([[a * scalar for a in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise SizeMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = other.transpose().entries
        return Matrix(
            [[_dot(row, col) for col in bt] for row in self.entries]
        )

    def transpose(self):
        return Matrix(list(zip(*self.entries))) if self.rows else Matrix([])

    def trace(self):
        if self.rows != self.cols:
            raise SizeMismatch("trace of a non-square matrix")
        t = GR_ZERO
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def apply(self, vector):
        """Matrix-vector product, vector as a tuple."""
        if len(vector) != self.cols:
            raise SizeMismatch(f"vector length {len(vector)} vs {self.cols} cols")
        return tuple(_dot(row, vector) for row in self.entries)

    def vec(self):
        """Row-major flattening."""
        return tuple(x for row in self.entries for x in row)

    def is_zero(self):
        return all(not x for row in self.entries for x in row)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix[{body}]"

    # -- elimination ----------------------------------------------------

    def rank(self) -> int:
        """Exact rank via fraction-free Bareiss elimination.

        Rows are first scaled to Gaussian-integer entries (rank is
        scale-invariant), after which every Bareiss division is exact and
        intermediate growth stays polynomial.
        """
        m = [list(_clear_denominators(row)) for row in self.entries]
        rows, cols = self.rows, self.cols
        rank = 0
        prev = GR_ONE
        for col in range(cols):
            piv = None
            for r in range(rank, rows):
                if m[r][col]:
                    piv = r
                    break
            if piv is None:
                continue
            if piv != rank:
                m[rank], m[piv] = m[piv], m[rank]
            pivot = m[rank][col]
            for r in range(rank + 1, rows):
                for c in range(col + 1, cols):
                    m[r][c] = (pivot * m[r][c] - m[r][col] * m[rank][c]) / prev
                m[r][col] = GR_ZERO
            prev = pivot
            rank += 1
            if rank == rows:
                break
        return rank

    def rref(self):
        """Reduced row echelon form; returns (matrix rows, pivot columns)."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for col in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if m[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = m[r][col].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][col]:
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def nullspace(self):
        """Exact basis of the right nullspace, one vector per free column.

        Each basis vector has entry 1 at its free column and 0 at every
        other free column, so the result is canonical.
        """
        m, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [GR_ZERO] * self.cols
            v[fc] = GR_ONE
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            basis.append(tuple(v))
        return basis

    def solve_affine(self, b):
        """One exact solution of self @ x = b, or None if inconsistent.

        Free variables are set to 0; pivots are the first nonzero entries
        in column order, so the particular solution is deterministic.
        """
        if len(b) != self.rows:
            raise SizeMismatch(f"rhs length {len(b)} vs {self.rows} rows")
        if self.rows == 0:
            return tuple([GR_ZERO] * self.cols)
        aug = Matrix([list(row) + [bv] for row, bv in zip(self.entries, b)])
        m, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [GR_ZERO] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = m[r][self.cols]
        return tuple(x)


def _dot(u, v):
    s = GR_ZERO
    for a, b in zip(u, v):
        s = s + a * b
    return s


def _clear_denominators(row):
    """Scale a row by the lcm of all component denominators."""
    lcm = 1
    for x in row:
        for d in (x.re.denominator, x.im.denominator):
            g = _gcd(lcm, d)
            lcm = lcm // g * d
    scale = GaussianRational(Fraction(lcm))
    return [x * scale for x in row]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# -- vector helpers ------------------------------------------------------


def dot(u, v):
    if len(u) != len(v):
        raise SizeMismatch(f"vector lengths {len(u)} vs {len(v)}")
    return _dot(u, v)


def outer(u, v):
    """Column u times row v."""
    return Matrix([[a * b for b in v] for a in u])


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(u, s):
    return tuple(a * s for a in u)


def zero_vector(n):
    return tuple([GR_ZERO] * n)


def is_zero_vector(u):
    return all(not x for x in u)


def stack_rows(vectors):
    """Matrix with the given tuples as rows."""
    return Matrix([list(v) for v in vectors])


def independent(vectors) -> bool:
    """True iff the vectors are linearly independent (exact rank check)."""
    if not vectors:
        return True
    return stack_rows(vectors).rank() == len(vectors)


def column_reduced(vectors):
    """Canonical (reduced-echelon) respan of a list of coordinate vectors.

    Used to normalize subspace bases so output is deterministic and
    diff-stable regardless of how the spanning set was produced.
    """
    if not vectors:
        return []
    m, _ = stack_rows(vectors).rref()
    return [tuple(row) for row in m if any(row)]
