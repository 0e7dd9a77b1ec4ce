"""Dense matrices over Q, Q[mu] or Q(mu).

Entries are ``Fraction``, ``UniPoly`` or ``RatFunc``.  Determinants of
polynomial matrices use Bareiss fraction-free elimination; anything with a
rational-function entry goes through ordinary Gaussian elimination over the
field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .unipoly import RatFunc, UniPoly


class NotSquare(ValueError):
    pass


def _zero_like(x):
    if isinstance(x, UniPoly):
        return UniPoly([], x.var)
    if isinstance(x, RatFunc):
        return RatFunc(UniPoly([], x.var))
    return Fraction(0)


def _one_like(x):
    if isinstance(x, UniPoly):
        return UniPoly([1], x.var)
    if isinstance(x, RatFunc):
        return RatFunc(UniPoly([1], x.var))
    return Fraction(1)


class Matrix:
    """Immutable rows x cols matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        rows = tuple(tuple(Fraction(x) if isinstance(x, int) else x for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int, like=Fraction(1)) -> "Matrix":
        one, zero = _one_like(like), _zero_like(like)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r: int, c: int, like=Fraction(0)) -> "Matrix":
        z = _zero_like(like)
        return cls([[z] * c for _ in range(r)], c)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows], self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.rows)] if self.nrows else [], self.nrows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = None
                for a, b in zip(r, c):
                    if a == 0 or b == 0:
                        continue
                    acc = a * b if acc is None else acc + a * b
                row.append(acc if acc is not None else _zero_like(r[0] if r else Fraction(0)))
            out.append(row)
        return Matrix(out, other.ncols)

    def apply(self, v: Sequence) -> list:
        return [col[0] for col in (self @ Matrix([[x] for x in v], 1)).rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def minor(self, i: int, j: int) -> "Matrix":
        return Matrix([r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i], self.ncols - 1)

    @staticmethod
    def block(a: "Matrix", b: "Matrix", c: "Matrix", d: "Matrix") -> "Matrix":
        """[[a, b], [c, d]]."""
        top = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)] if a.nrows else []
        bottom = [list(rc) + list(rd) for rc, rd in zip(c.rows, d.rows)] if d.nrows else []
        return Matrix(top + bottom, a.ncols + d.ncols)


def _entry_kind(m: Matrix) -> str:
    kinds = {type(x) for r in m.rows for x in r}
    if RatFunc in kinds:
        return "ratfunc"
    if UniPoly in kinds:
        return "poly"
    return "rational"


def _promote(m: Matrix, kind: str, var: str = "mu") -> list[list]:
    if kind == "ratfunc":
        def conv(x):
            if isinstance(x, RatFunc):
                return x
            if isinstance(x, UniPoly):
                return RatFunc(x)
            return RatFunc(UniPoly([x], var))
    elif kind == "poly":
        def conv(x):
            return x if isinstance(x, UniPoly) else UniPoly([x], var)
    else:
        def conv(x):
            return x
    return [[conv(x) for x in r] for r in m.rows]


def _var_of(m: Matrix) -> str:
    for r in m.rows:
        for x in r:
            if isinstance(x, (UniPoly, RatFunc)):
                return x.var
    return "mu"


def matrix_det(m: Matrix):
    """Exact determinant.  Bareiss over Q or Q[mu], field elimination over Q(mu)."""
    if not m.is_square():
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    kind = _entry_kind(m)
    var = _var_of(m)
    n = m.nrows
    if n == 0:
        return {"ratfunc": RatFunc(UniPoly([1], var)), "poly": UniPoly([1], var)}.get(kind, Fraction(1))
    a = _promote(m, kind, var)
    if kind == "ratfunc":
        return _det_field(a)
    return _det_bareiss(a, kind)


def _det_bareiss(a: list[list], kind: str):
    n = len(a)
    sign = 1
    prev = UniPoly([1], a[0][0].var) if kind == "poly" else Fraction(1)
    div = (lambda x, y: x.exact_div(y)) if kind == "poly" else (lambda x, y: x / y)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * pk - aik * a[k][j], prev)
            a[i][k] = a[i][k] * 0
        prev = pk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _det_field(a: list[list]):
    n = len(a)
    det = a[0][0] * 0 + 1
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return det * 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pk = a[k][k]
        det = det * pk
        inv = 1 / pk
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] * inv
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return det


def det_cofactor(m: Matrix):
    """Laplace expansion along the first row; test oracle for small sizes."""
    if not m.is_square():
        raise NotSquare("cofactor expansion of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0, 0]
    total = 0
    for j in range(n):
        term = m[0, j] * det_cofactor(m.minor(0, j))
        total = total + term if j % 2 == 0 else total - term
    return total


def rref(m: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the entry field; pivots chosen top-down, left-right."""
    kind = _entry_kind(m)
    var = _var_of(m)
    a = _promote(m, "ratfunc" if kind == "poly" else kind, var)
    rows, cols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def matrix_rank(m: Matrix) -> int:
    return len(rref(m)[1])


def matrix_kernel(m: Matrix, like=None) -> list[list]:
    """Right null-space basis: one vector per free column, that column set to 1."""
    a, pivots = rref(m)
    if like is None:
        kind = _entry_kind(m)
        var = _var_of(m)
        like = {"rational": Fraction(1)}.get(kind, RatFunc(UniPoly([1], var)))
    zero, one = _zero_like(like), _one_like(like)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        basis.append(v)
    return basis


def column_space_basis(m: Matrix) -> list[list]:
    """Columns of m at the pivot positions of its RREF."""
    _, pivots = rref(m)
    return [m.col(c) for c in pivots]
