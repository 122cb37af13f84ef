"""Matrices over F_q[z] and F_q.

Generator matrices are classified here: *reduced* (the matrix of row-leading
coefficients has full rank), *basic* (the maximal minors are coprime) and
*canonical* (both).  :func:`smith_normal_form` drives :func:`basicize`, and
:func:`reduce_rows` lowers row degrees until the matrix is reduced.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from cgoppa.errors import CodeError, FieldMismatchError, RankDeficientError
from cgoppa.galois import FieldElement, FieldSpec
from cgoppa.polyring import Poly, gcd, parse_poly, poly_divmod

__all__ = [
    "PolyMatrix",
    "ConstMatrix",
    "row_degrees",
    "leading_row_matrix",
    "is_reduced",
    "minors",
    "minors_gcd",
    "is_basic",
    "is_canonical",
    "determinant",
    "smith_normal_form",
    "basicize",
    "reduce_rows",
    "canonical_form",
    "rank_rational",
    "specialize",
    "const_rank",
    "left_kernel_vector",
    "same_row_space",
    "parse_matrix",
]


def _split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


class PolyMatrix:
    """A k x n matrix of :class:`Poly` over one field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable]):
        self.field = field
        built = []
        for row in rows:
            r = []
            for e in row:
                if isinstance(e, Poly):
                    if e.field != field:
                        raise FieldMismatchError("matrix entries must share one field")
                    r.append(e)
                else:
                    r.append(Poly(field, [e]))
            built.append(tuple(r))
        if not built or not built[0]:
            raise CodeError("a matrix needs at least one row and one column")
        if any(len(r) != len(built[0]) for r in built):
            raise CodeError("ragged matrix rows")
        self.rows: tuple[tuple[Poly, ...], ...] = tuple(built)

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> PolyMatrix:
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(size)] for i in range(size)])

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.k, self.n

    @property
    def entries(self) -> list[Poly]:
        return [e for row in self.rows for e in row]

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            return self.field == other.field and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rows))

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.n != other.k:
            raise CodeError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Poly.zero(self.field)
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append([sum((a * b for a, b in zip(row, col)), zero) for col in cols])
        return PolyMatrix(self.field, out)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix(self.field, [[self.rows[i][j] for j in cols] for i in rows])

    def stack(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix(self.field, self.rows + other.rows)

    def scale_row(self, i: int, c) -> PolyMatrix:
        c = self.field(c)
        rows = list(self.rows)
        rows[i] = tuple(e * c for e in rows[i])
        return PolyMatrix(self.field, rows)

    def max_degree(self) -> int:
        return max((e.degree for e in self.entries if e), default=0)

    def to_text(self) -> str:
        return "; ".join(", ".join(str(e) for e in row) for row in self.rows)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"PolyMatrix({self.to_text()!r})"


class ConstMatrix:
    """A matrix over F_q, stored as packed field indices."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable]):
        self.field = field
        built = []
        for row in rows:
            r = []
            for e in row:
                if isinstance(e, FieldElement):
                    if e.field != field:
                        raise FieldMismatchError("matrix entries must share one field")
                    r.append(e.index)
                elif isinstance(e, str):
                    r.append(field.parse(e).index)
                else:
                    r.append(int(e) % field.p)
            built.append(tuple(r))
        if not built or not built[0]:
            raise CodeError("a matrix needs at least one row and one column")
        if any(len(r) != len(built[0]) for r in built):
            raise CodeError("ragged matrix rows")
        self.rows: tuple[tuple[int, ...], ...] = tuple(built)

    @classmethod
    def _raw(cls, field: FieldSpec, rows) -> ConstMatrix:
        m = object.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    def __eq__(self, other):
        if isinstance(other, ConstMatrix):
            return self.field == other.field and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rows))

    def __matmul__(self, other: ConstMatrix) -> ConstMatrix:
        F = self.field
        if self.shape[1] != other.shape[0]:
            raise CodeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            line = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    acc = F.add(acc, F.mul(a, b))
                line.append(acc)
            out.append(line)
        return ConstMatrix._raw(F, out)

    def to_text(self) -> str:
        F = self.field
        return "; ".join(", ".join(F.format(e) for e in row) for row in self.rows)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"ConstMatrix({self.to_text()!r})"


# -- degree structure ---------------------------------------------------------


def row_degrees(M: PolyMatrix) -> list[int]:
    out = []
    for i, row in enumerate(M.rows):
        d = max(e.degree for e in row)
        if d < 0:
            raise CodeError(f"row {i} is identically zero")
        out.append(int(d))
    return out


def leading_row_matrix(M: PolyMatrix) -> ConstMatrix:
    """Coefficient of ``z^{nu_i}`` in every entry of row i."""
    nus = row_degrees(M)
    return ConstMatrix._raw(M.field, [[e.coeff(nu) for e in row] for nu, row in zip(nus, M.rows)])


def is_reduced(M: PolyMatrix) -> bool:
    if M.k > M.n:
        raise CodeError("a generator matrix needs k <= n")
    return const_rank(leading_row_matrix(M)) == M.k


# -- constant linear algebra ----------------------------------------------------


def _echelon(F: FieldSpec, rows: list[list[int]], track: list[list[int]] | None = None) -> int:
    """In-place Gauss-Jordan elimination; returns the rank.

    Row operations are mirrored on ``track`` when given.
    """
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        if track is not None:
            track[rank], track[piv] = track[piv], track[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(x, inv) for x in rows[rank]]
        if track is not None:
            track[rank] = [F.mul(x, inv) for x in track[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(rows[r], rows[rank])]
                if track is not None:
                    track[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(track[r], track[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def const_rank(C: ConstMatrix) -> int:
    return _echelon(C.field, [list(r) for r in C.rows])


def left_kernel_vector(C: ConstMatrix) -> list[int] | None:
    """A nonzero ``c`` with ``c @ C == 0``, or None when the rows are independent."""
    F = C.field
    k = len(C.rows)
    rows = [list(r) for r in C.rows]
    track = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    rank = _echelon(F, rows, track)
    if rank == k:
        return None
    return track[rank]


# -- fraction-free elimination over F_q[z] --------------------------------------


def _exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if r:
        raise ArithmeticError("non-exact division in fraction-free elimination")
    return q


def _bareiss(rows: list[list[Poly]]) -> tuple[int, Poly, int]:
    """Fraction-free row echelon in place.

    Returns ``(rank, last_pivot, swaps)``; for a square nonsingular input the
    last pivot is the determinant up to the sign ``(-1)**swaps``.
    """
    F = rows[0][0].field
    nrows, ncols = len(rows), len(rows[0])
    prev = Poly.one(F)
    rank = 0
    swaps = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            swaps += 1
        p = rows[rank][col]
        for r in range(rank + 1, nrows):
            a = rows[r][col]
            rows[r] = [_exact_div(p * x - a * y, prev) for x, y in zip(rows[r], rows[rank])]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank, prev, swaps


def determinant(M: PolyMatrix) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination."""
    if M.k != M.n:
        raise CodeError("determinant of a non-square matrix")
    rows = [list(r) for r in M.rows]
    rank, last, swaps = _bareiss(rows)
    if rank < M.k:
        return Poly.zero(M.field)
    return -last if swaps % 2 else last


def rank_rational(M: PolyMatrix) -> int:
    """Rank over the fraction field F_q(z)."""
    return _bareiss([list(r) for r in M.rows])[0]


def minors(M: PolyMatrix) -> dict[tuple[int, ...], Poly]:
    """All maximal (k x k) minors keyed by column subset."""
    if M.k > M.n:
        raise CodeError("maximal minors need k <= n")
    return {
        cols: determinant(M.submatrix(range(M.k), cols))
        for cols in itertools.combinations(range(M.n), M.k)
    }


def minors_gcd(M: PolyMatrix) -> Poly:
    """Monic gcd of the maximal minors."""
    nonzero = [m for m in minors(M).values() if m]
    if not nonzero:
        raise RankDeficientError(f"{M.k} x {M.n} matrix does not have full row rank")
    g = nonzero[0].monic()
    for m in nonzero[1:]:
        if g.degree == 0:
            break
        g = gcd(g, m)
    return g


def is_basic(M: PolyMatrix) -> bool:
    return minors_gcd(M).degree == 0


def is_canonical(M: PolyMatrix) -> bool:
    return is_reduced(M) and is_basic(M)


# -- Smith normal form ----------------------------------------------------------


def smith_normal_form(
    M: PolyMatrix, *, with_inverse: bool = False
) -> tuple[PolyMatrix, PolyMatrix, PolyMatrix] | tuple[PolyMatrix, PolyMatrix, PolyMatrix, PolyMatrix]:
    """Unimodular ``U``, ``V`` and diagonal ``S`` with ``U @ M @ V == S``.

    Pivots are chosen by least degree, ties broken by row then column.  The
    invariant factors on the diagonal are monic and each divides the next.
    With ``with_inverse=True`` the inverse of ``V`` is returned as a fourth
    value.
    """
    F = M.field
    k, n = M.shape
    zero, one = Poly.zero(F), Poly.one(F)
    A = [list(r) for r in M.rows]
    U = [[one if i == j else zero for j in range(k)] for i in range(k)]
    V = [[one if i == j else zero for j in range(n)] for i in range(n)]
    Vi = [[one if i == j else zero for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_axpy(dst, src, q):
        # row dst += q * row src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def col_axpy(dst, src, q):
        # col dst += q * col src; inverse gets row src -= q * row dst
        for row in A:
            row[dst] = row[dst] + q * row[src]
        for row in V:
            row[dst] = row[dst] + q * row[src]
        Vi[src] = [x - q * y for x, y in zip(Vi[src], Vi[dst])]

    for t in range(min(k, n)):
        while True:
            best = None
            for i in range(t, k):
                for j in range(t, n):
                    e = A[i][j]
                    if e and (best is None or e.degree < best[0]):
                        best = (e.degree, i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            pivot = A[t][t]
            clean = True
            for i in range(t + 1, k):
                if A[i][t]:
                    q, r = poly_divmod(A[i][t], pivot)
                    row_axpy(i, t, -q)
                    clean = clean and not r
            for j in range(t + 1, n):
                if A[t][j]:
                    q, r = poly_divmod(A[t][j], pivot)
                    col_axpy(j, t, -q)
                    clean = clean and not r
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, k) for j in range(t + 1, n) if poly_divmod(A[i][j], pivot)[1]),
                None,
            )
            if bad is None:
                break
            row_axpy(t, bad, one)
        if not A[t][t]:
            break
        c = F.inv(A[t][t].lead)
        A[t] = [x.scale(c) for x in A[t]]
        U[t] = [x.scale(c) for x in U[t]]

    out = (PolyMatrix(F, U), PolyMatrix(F, A), PolyMatrix(F, V))
    if with_inverse:
        return out + (PolyMatrix(F, Vi),)
    return out


def basicize(M: PolyMatrix) -> PolyMatrix:
    """A basic matrix with the same row space as ``M`` over F_q(z).

    With ``U M V = [D 0]`` we have ``M = U^{-1} D B`` where ``B`` is the
    first k rows of ``V^{-1}``; ``B`` is part of a unimodular matrix, hence
    basic, and every row of ``M`` is a polynomial combination of its rows.
    """
    if M.k > M.n or rank_rational(M) < M.k:
        raise RankDeficientError(f"{M.k} x {M.n} matrix does not have full row rank")
    _, _, _, Vi = smith_normal_form(M, with_inverse=True)
    return PolyMatrix(M.field, Vi.rows[: M.k])


def reduce_rows(M: PolyMatrix) -> PolyMatrix:
    """Unimodular row operations that make ``M`` reduced.

    While the leading-coefficient matrix has a left kernel vector ``c``, the
    row of largest degree among those with ``c_i != 0`` is replaced by
    ``sum_i c_i z^{nu - nu_i} row_i``, which strictly lowers its degree.
    Basicness and the row space are preserved.
    """
    F = M.field
    rows = [list(r) for r in M.rows]
    while True:
        cur = PolyMatrix(F, rows)
        nus = row_degrees(cur)
        c = left_kernel_vector(leading_row_matrix(cur))
        if c is None:
            return cur
        support = [i for i, ci in enumerate(c) if ci]
        top = max(support, key=lambda i: (nus[i], -i))
        new = [Poly.zero(F)] * M.n
        for i in support:
            shift = nus[top] - nus[i]
            new = [x + y.scale(c[i]).shift(shift) for x, y in zip(new, rows[i])]
        if all(not e for e in new):
            raise RankDeficientError("rows are dependent over F_q(z)")
        rows[top] = new


def canonical_form(M: PolyMatrix) -> PolyMatrix:
    """Reduced basic matrix for the code generated by ``M`` (``M`` itself if already canonical)."""
    if is_canonical(M):
        return M
    return reduce_rows(basicize(M))


def same_row_space(A: PolyMatrix, B: PolyMatrix) -> bool:
    """Equal row spaces over F_q(z)."""
    ra, rb = rank_rational(A), rank_rational(B)
    return ra == rb == rank_rational(A.stack(B))


def specialize(M: PolyMatrix, z0) -> ConstMatrix:
    """Evaluate every entry at ``z = z0``."""
    F = M.field
    return ConstMatrix._raw(F, [[e(z0).index for e in row] for row in M.rows])


def parse_matrix(field: FieldSpec, text: str) -> PolyMatrix:
    """Rows separated by ``;``, entries by ``,``."""
    rows = [[parse_poly(field, e) for e in _split_top(r, ",")] for r in _split_top(text, ";")]
    return PolyMatrix(field, rows)
