"""Exact integer matrices, Smith normal form, and GF(2) linear algebra.

Matrices are small at desk scale (a few hundred rows), so the storage is a
dict of nonzero entries with dense fallbacks inside the elimination loops.
All arithmetic uses Python integers, so there is no overflow.
"""

from __future__ import annotations

from .errors import InternalError


class IntMatrix:
    """Sparse integer matrix with optional row/column degree labels."""

    __slots__ = ("nrows", "ncols", "data", "row_degrees", "col_degrees")

    def __init__(self, nrows, ncols, data=None, row_degrees=None, col_degrees=None):
        self.nrows = nrows
        self.ncols = ncols
        self.data = {}
        if data:
            for (i, j), v in dict(data).items():
                if v:
                    if not (0 <= i < nrows and 0 <= j < ncols):
                        raise IndexError((i, j))
                    self.data[(i, j)] = int(v)
        self.row_degrees = list(row_degrees) if row_degrees is not None else None
        self.col_degrees = list(col_degrees) if col_degrees is not None else None

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_rows(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        data = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v:
                    data[(i, j)] = v
        return cls(nrows, ncols, data)

    def to_rows(self):
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.data.items():
            rows[i][j] = v
        return rows

    def __getitem__(self, ij):
        return self.data.get(ij, 0)

    def __setitem__(self, ij, v):
        if v:
            self.data[ij] = v
        else:
            self.data.pop(ij, None)

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(sorted(self.data.items()))))

    def is_zero(self):
        return not self.data

    def __add__(self, other):
        out = IntMatrix(self.nrows, self.ncols, self.data)
        for ij, v in other.data.items():
            out[ij] = out[ij] + v
        return out

    def __sub__(self, other):
        out = IntMatrix(self.nrows, self.ncols, self.data)
        for ij, v in other.data.items():
            out[ij] = out[ij] - v
        return out

    def __neg__(self):
        return IntMatrix(self.nrows, self.ncols, {ij: -v for ij, v in self.data.items()})

    def scaled(self, c):
        return IntMatrix(self.nrows, self.ncols, {ij: c * v for ij, v in self.data.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (i, k), v in self.data.items():
            by_row.setdefault(i, []).append((k, v))
        other_by_row = {}
        for (k, j), w in other.data.items():
            other_by_row.setdefault(k, []).append((j, w))
        data = {}
        for i, row in by_row.items():
            acc = {}
            for k, v in row:
                for j, w in other_by_row.get(k, ()):
                    acc[j] = acc.get(j, 0) + v * w
            for j, s in acc.items():
                if s:
                    data[(i, j)] = s
        return IntMatrix(self.nrows, other.ncols, data)

    def transpose(self):
        return IntMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.data.items()})

    def column(self, j):
        return [self.data.get((i, j), 0) for i in range(self.nrows)]

    def apply(self, vec):
        """Matrix times column vector (list of ints)."""
        out = [0] * self.nrows
        for (i, j), v in self.data.items():
            if vec[j]:
                out[i] += v * vec[j]
        return out

    def mod(self, m):
        return IntMatrix(self.nrows, self.ncols, {ij: v % m for ij, v in self.data.items()})

    def nonzero_entries(self):
        return sorted(self.data.items())

    def to_json(self):
        return {
            "shape": [self.nrows, self.ncols],
            "entries": [[i, j, v] for (i, j), v in self.nonzero_entries()],
        }

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols}, {len(self.data)} nonzero)"


def smith_normal_form(mat):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (diag, rank, S, S_inv, T) with S*mat*T diagonal, diag the
    invariant factors d_1 | d_2 | ... (all positive), rank = len(diag).
    S, S_inv, T are unimodular; S_inv is maintained alongside S so homology
    generators can be read off without a separate inversion.
    """
    m, n = mat.nrows, mat.ncols
    a = mat.to_rows()
    s = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    s_inv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_add(i, j, c):
        # R_i += c R_j on a and s; inverse op on s_inv columns.
        ai, aj = a[i], a[j]
        for k in range(n):
            if aj[k]:
                ai[k] += c * aj[k]
        si, sj = s[i], s[j]
        for k in range(m):
            if sj[k]:
                si[k] += c * sj[k]
        for r in range(m):
            if s_inv[r][i]:
                s_inv[r][j] -= c * s_inv[r][i]

    def col_add(j, i, c):
        # C_j += c C_i on a and t.
        for r in range(m):
            if a[r][i]:
                a[r][j] += c * a[r][i]
        for r in range(n):
            if t[r][i]:
                t[r][j] += c * t[r][i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        s[i], s[j] = s[j], s[i]
        for r in range(m):
            s_inv[r][i], s_inv[r][j] = s_inv[r][j], s_inv[r][i]

    def col_swap(i, j):
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            t[r][i], t[r][j] = t[r][j], t[r][i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        s[i] = [-x for x in s[i]]
        for r in range(m):
            s_inv[r][i] = -s_inv[r][i]

    rank = 0
    for pos in range(min(m, n)):
        # Pivot: minimal absolute value among nonzero entries of the submatrix.
        pivot = None
        best = None
        for i in range(pos, m):
            row = a[i]
            for j in range(pos, n):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        row_swap(pos, pi)
        col_swap(pos, pj)
        if a[pos][pos] < 0:
            row_negate(pos)
        while True:
            p = a[pos][pos]
            done = True
            for i in range(pos + 1, m):
                if a[i][pos]:
                    q = a[i][pos] // p
                    row_add(i, pos, -q)
                    if a[i][pos]:
                        row_swap(pos, i)
                        if a[pos][pos] < 0:
                            row_negate(pos)
                        done = False
                        break
            if not done:
                continue
            for j in range(pos + 1, n):
                if a[pos][j]:
                    q = a[pos][j] // p
                    col_add(j, pos, -q)
                    if a[pos][j]:
                        col_swap(pos, j)
                        done = False
                        break
            if done:
                break
        rank += 1

    # Enforce the divisibility chain d_1 | d_2 | ...
    changed = True
    while changed:
        changed = False
        for k in range(rank - 1):
            dk, dn = a[k][k], a[k + 1][k + 1]
            if dn % dk:
                # Standard trick: fold d_{k+1} into position k via gcd.
                col_add(k, k + 1, 1)
                while True:
                    p = a[k][k]
                    if a[k + 1][k]:
                        q = a[k + 1][k] // p
                        row_add(k + 1, k, -q)
                        if a[k + 1][k]:
                            row_swap(k, k + 1)
                            if a[k][k] < 0:
                                row_negate(k)
                            continue
                    if a[k][k + 1]:
                        q = a[k][k + 1] // p
                        col_add(k + 1, k, -q)
                        if a[k][k + 1]:
                            col_swap(k, k + 1)
                            continue
                    break
                if a[k + 1][k + 1] < 0:
                    row_negate(k + 1)
                changed = True
    diag = [a[i][i] for i in range(rank)]
    S = IntMatrix.from_rows(s)
    S_inv = IntMatrix.from_rows(s_inv)
    T = IntMatrix.from_rows(t)
    return diag, rank, S, S_inv, T


def snf_diagonal(mat):
    """Invariant factors and rank only."""
    diag, rank, _, _, _ = smith_normal_form(mat)
    return diag, rank


def kernel_basis(mat):
    """Basis of the integer kernel lattice, as an IntMatrix whose columns span it.

    The basis is saturated: any integer vector in the rational kernel is an
    integer combination of the columns.
    """
    diag, rank, _, _, T = smith_normal_form(mat)
    cols = []
    for j in range(rank, mat.ncols):
        cols.append(T.column(j))
    data = {}
    for jj, col in enumerate(cols):
        for i, v in enumerate(col):
            if v:
                data[(i, jj)] = v
    return IntMatrix(mat.ncols, len(cols), data)


def solve_exact(mat, rhs_cols):
    """Solve mat * X = B over the integers, B given as IntMatrix of columns.

    Returns X or raises InternalError when some column has no integral
    solution (callers use this only where solvability is guaranteed).
    """
    diag, rank, S, _, T = smith_normal_form(mat)
    if mat.nrows != rhs_cols.nrows:
        raise ValueError("shape mismatch")
    sb = S * rhs_cols
    data = {}
    for j in range(rhs_cols.ncols):
        y = [0] * mat.ncols
        for i in range(mat.nrows):
            v = sb[(i, j)]
            if i < rank:
                if v % diag[i]:
                    raise InternalError("no integral solution in solve_exact")
                y[i] = v // diag[i]
            elif v:
                raise InternalError("inconsistent system in solve_exact")
        for i, v in enumerate(y):
            if v:
                data[(i, j)] = v
    X = IntMatrix(mat.ncols, rhs_cols.ncols, data)
    return T * X


def det_unimodular(mat):
    """Determinant of a square matrix expected to be +-1; exact via SNF."""
    if mat.nrows != mat.ncols:
        raise ValueError("not square")
    diag, rank, _, _, _ = smith_normal_form(mat)
    if rank < mat.nrows:
        return 0
    d = 1
    for v in diag:
        d *= v
    return d


def invert_unimodular(mat):
    """Inverse of a unimodular integer matrix."""
    n = mat.nrows
    return solve_exact(mat, IntMatrix.identity(n))


class GF2Matrix:
    """Dense matrix over the field with two elements; rows as bitmasks."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = list(rows) if rows is not None else [0] * nrows

    @classmethod
    def from_int_matrix(cls, mat):
        rows = [0] * mat.nrows
        for (i, j), v in mat.data.items():
            if v % 2:
                rows[i] |= 1 << j
        return cls(mat.nrows, mat.ncols, rows)

    def __getitem__(self, ij):
        i, j = ij
        return (self.rows[i] >> j) & 1

    def copy(self):
        return GF2Matrix(self.nrows, self.ncols, self.rows)

    def rank(self):
        rows = [r for r in self.rows if r]
        rank = 0
        while rows:
            pivot_row = min(rows, key=lambda r: r & -r)
            low = pivot_row & -pivot_row
            rows = [r ^ pivot_row if r & low else r for r in rows]
            rows = [r for r in rows if r]
            rank += 1
        return rank

    def columns_as_masks(self):
        cols = [0] * self.ncols
        for i in range(self.nrows):
            r = self.rows[i]
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return cols

    def kernel_basis(self):
        """List of kernel vectors, each a bitmask over columns."""
        basis = {}  # pivot bit -> (reduced col, combo)
        kernel = []
        for j, col in enumerate(self.columns_as_masks()):
            combo = 1 << j
            while col:
                pb = col & -col
                if pb not in basis:
                    basis[pb] = (col, combo)
                    break
                bcol, bcombo = basis[pb]
                col ^= bcol
                combo ^= bcombo
            else:
                kernel.append(combo)
        return kernel

    def apply(self, vec_mask):
        out = 0
        for j, col in enumerate(self.columns_as_masks()):
            if (vec_mask >> j) & 1:
                out ^= col
        return out

    def mul(self, other):
        out = GF2Matrix(self.nrows, other.ncols)
        ot = other.columns_as_masks()
        for i in range(self.nrows):
            r = self.rows[i]
            acc = 0
            for j, col in enumerate(ot):
                if bin(r & col).count("1") % 2:
                    acc |= 1 << j
            out.rows[i] = acc
        return out

    def solve(self, rhs_mask):
        """One solution x (bitmask over columns) of self * x = rhs, or None."""
        basis = {}  # pivot bit -> (reduced col, combo)
        for j, col in enumerate(self.columns_as_masks()):
            combo = 1 << j
            while col:
                pb = col & -col
                if pb not in basis:
                    basis[pb] = (col, combo)
                    break
                bcol, bcombo = basis[pb]
                col ^= bcol
                combo ^= bcombo
        acc = rhs_mask
        out = 0
        while acc:
            pb = acc & -acc
            if pb not in basis:
                return None
            bcol, bcombo = basis[pb]
            acc ^= bcol
            out ^= bcombo
        return out
