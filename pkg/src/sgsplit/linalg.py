"""Exact dense linear algebra over Q and prime fields.

Everything downstream (Hom spaces, kernels, syzygies) reduces to the three
primitives here: rref, kernel_basis and solve.  No floating point anywhere.
Rationals use Fraction (arbitrary precision); F_p elements are ints in [0, p).
"""

from __future__ import annotations

from fractions import Fraction

from sgsplit.errors import InvalidPresentationError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """The rationals (char == 0) or the prime field F_char."""

    def __init__(self, char: int = 0):
        if char != 0 and not _is_prime(char):
            raise InvalidPresentationError(f"characteristic {char} is not prime")
        self.char = char

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    def of(self, n):
        """Coerce an integer (or Fraction, over Q) into the field."""
        if self.char:
            return int(n) % self.char
        if isinstance(n, Fraction):
            return n
        return Fraction(n)

    @property
    def zero(self):
        return 0 if self.char else Fraction(0)

    @property
    def one(self):
        return 1 if self.char else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero field element")
        if self.char:
            return pow(a, self.char - 2, self.char)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random(self, rng):
        """A random element; over Q, a small integer (enough for genericity)."""
        if self.char:
            return rng.randrange(self.char)
        return Fraction(rng.randint(-9, 9))

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


class Matrix:
    """Immutable-by-convention dense matrix with entries in a Field.

    Stored row-major as a list of lists.  Vectors throughout the package are
    plain lists used as row vectors, acting on the left: x @ A.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data, cols: int | None = None):
        self.field = field
        self.data = [[field.of(x) if not self._is_elt(field, x) else x for x in row] for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(r) != self.cols for r in self.data):
                raise InvalidPresentationError("ragged matrix rows")
            if cols is not None and cols != self.cols:
                raise InvalidPresentationError("cols mismatch")
        else:
            if cols is None:
                raise InvalidPresentationError("empty matrix needs explicit cols")
            self.cols = cols

    @staticmethod
    def _is_elt(field, x):
        return isinstance(x, int) if field.char else isinstance(x, Fraction)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def from_rows(cls, field: Field, rows, cols: int) -> "Matrix":
        return cls(field, [list(r) for r in rows], cols)

    def copy(self) -> "Matrix":
        return Matrix(self.field, [row[:] for row in self.data], self.cols)

    def row(self, i):
        return self.data[i][:]

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __add__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(
            f,
            [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(
            f,
            [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.neg(a) for a in r] for r in self.data], self.cols)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.of(c) if not self._is_elt(f, c) else c
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.data], self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InvalidPresentationError(
                f"matmul shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        f = self.field
        z = f.zero
        out = [[z] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            orow = out[i]
            for k, a in enumerate(row):
                if a == z:
                    continue
                brow = other.data[k]
                for j, b in enumerate(brow):
                    if b != z:
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return Matrix(f, out, other.cols)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.rows,
        )

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row-echelon form and the (strictly increasing) pivot columns."""
        f = self.field
        z = f.zero
        m = [row[:] for row in self.data]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c] != z:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, x) for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != z:
                    factor = m[i][c]
                    m[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(f, m, self.cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list]:
        """Basis of the right null space {x : self @ x = 0}, as column vectors."""
        f = self.field
        z = f.zero
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [z] * self.cols
            v[fc] = f.one
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(red.data[r][fc])
            basis.append(v)
        return basis

    def left_kernel_basis(self) -> list[list]:
        """Basis of {x : x @ self = 0}, as row vectors."""
        return self.transpose().kernel_basis()

    def solve(self, b: list):
        """Some x with self @ x = b (column convention), or None."""
        if len(b) != self.rows:
            raise InvalidPresentationError("solve: rhs length mismatch")
        f = self.field
        z = f.zero
        rhs = [x if self._is_elt(f, x) else f.of(x) for x in b]
        aug = Matrix(f, [self.data[i] + [rhs[i]] for i in range(self.rows)], self.cols + 1)
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [z] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.data[r][self.cols]
        return x

    def solve_left(self, b: list):
        """Some x with x @ self = b (row convention), or None."""
        return self.transpose().solve(b)

    def inverse(self) -> "Matrix | None":
        if self.rows != self.cols:
            return None
        f = self.field
        n = self.rows
        aug = Matrix(f, [self.data[i] + Matrix.identity(f, n).data[i] for i in range(n)], 2 * n)
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            return None
        return Matrix(f, [red.data[i][n:] for i in range(n)], n)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"


def mat_vec(v: list, m: Matrix) -> list:
    """Row vector times matrix."""
    f = m.field
    z = f.zero
    out = [z] * m.cols
    for k, a in enumerate(v):
        if a == z:
            continue
        row = m.data[k]
        for j, b in enumerate(row):
            if b != z:
                out[j] = f.add(out[j], f.mul(a, b))
    return out


def hstack(mats: list[Matrix], field: Field, rows: int) -> Matrix:
    if not mats:
        return Matrix.zeros(field, rows, 0)
    out = [[] for _ in range(rows)]
    for m in mats:
        for i in range(rows):
            out[i].extend(m.data[i])
    return Matrix(field, out, sum(m.cols for m in mats))


def vstack(mats: list[Matrix], field: Field, cols: int) -> Matrix:
    data = []
    for m in mats:
        data.extend(row[:] for row in m.data)
    return Matrix(field, data, cols)


def block_diag(mats: list[Matrix], field: Field) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Matrix.zeros(field, rows, cols)
    r = c = 0
    for m in mats:
        for i in range(m.rows):
            out.data[r + i][c : c + m.cols] = m.data[i][:]
        r += m.rows
        c += m.cols
    return out


def row_space_contains(rref_rows: Matrix, pivots: list[int], v: list):
    """Coordinates of v over the rref rows, or None if v is outside the span."""
    f = rref_rows.field
    z = f.zero
    v = v[:]
    coords = []
    for r, pc in enumerate(pivots):
        c = v[pc]
        coords.append(c)
        if c != z:
            row = rref_rows.data[r]
            v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
    if any(x != z for x in v):
        return None
    return coords


class RowSpace:
    """Incrementally built subspace of row vectors, kept in rref."""

    def __init__(self, field: Field, ambient: int):
        self.field = field
        self.ambient = ambient
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, v: list) -> list:
        f = self.field
        z = f.zero
        v = v[:]
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c != z:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return v

    def contains(self, v: list) -> bool:
        z = self.field.zero
        return all(x == z for x in self._reduce(v))

    def coords(self, v: list):
        """Coordinates over the stored rref rows, or None."""
        f = self.field
        z = f.zero
        v = v[:]
        coords = []
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            coords.append(c)
            if c != z:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        if any(x != z for x in v):
            return None
        return coords

    def add(self, v: list) -> bool:
        """Insert v; returns True if the dimension grew."""
        f = self.field
        z = f.zero
        v = self._reduce(v)
        pc = next((i for i, x in enumerate(v) if x != z), None)
        if pc is None:
            return False
        inv = f.inv(v[pc])
        v = [f.mul(inv, x) for x in v]
        # keep rref: clear column pc in existing rows, insert sorted by pivot
        for i, row in enumerate(self.rows):
            c = row[pc]
            if c != z:
                self.rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(row, v)]
        at = next((i for i, p in enumerate(self.pivots) if p > pc), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pc)
        return True

    def basis_matrix(self) -> Matrix:
        return Matrix.from_rows(self.field, self.rows, self.ambient)
