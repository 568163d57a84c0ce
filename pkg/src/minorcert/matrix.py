"""Dense matrices over any scalar kind, with the structured constructors used
throughout the toolkit: Toeplitz matrices from their diagonal constants, the
all-ones/identity/shift matrices, the generic skew-symmetric Toeplitz family
over Z[b1..b_{n-1}], and contiguous-block extraction.

Contiguous blocks use the 1-based A_r(i, j) convention (the r x r submatrix
whose top-left corner sits at row i, column j); raw entry access ``A[i, j]``
stays 0-based like everything else in Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ring import MultiPoly, variables

__all__ = [
    "Matrix",
    "ToeplitzSpec",
    "generic_skew_toeplitz",
    "identity",
    "is_skew_symmetric",
    "johnson_family",
    "lower_shift",
    "matrix_from_json",
    "matrix_to_json",
    "matvec",
    "max_abs",
    "ones",
    "outer",
    "toeplitz_build",
    "zeros",
]


class Matrix:
    """Immutable dense matrix; entries may be int, Fraction, MultiPoly, float
    or complex, as long as a single matrix stays within one arithmetic world
    (exact or floating)."""

    __slots__ = ("_r", "_c", "_d")

    def __init__(self, rows: int, cols: int, data):
        data = tuple(data)
        if rows < 0 or cols < 0 or (rows == 0) != (cols == 0):
            raise ValueError("rows and cols must be positive (or both zero)")
        if len(data) != rows * cols:
            raise ValueError(
                f"data: expected {rows * cols} entries, got {len(data)}"
            )
        self._r = rows
        self._c = cols
        self._d = data

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows have unequal lengths")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @property
    def rows(self) -> int:
        return self._r

    @property
    def cols(self) -> int:
        return self._c

    @property
    def is_square(self) -> bool:
        return self._r == self._c

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self._r and 0 <= j < self._c):
            raise IndexError(f"entry ({i}, {j}) outside {self._r}x{self._c}")
        return self._d[i * self._c + j]

    def to_rows(self) -> list:
        c = self._c
        return [list(self._d[i * c:(i + 1) * c]) for i in range(self._r)]

    def entries(self):
        return self._d

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._r != other._r or self._c != other._c:
            return False
        return all(a == b for a, b in zip(self._d, other._d))

    def __hash__(self):
        return hash((self._r, self._c, self._d))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(self._r, self._c, [a + b for a, b in zip(self._d, other._d)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(self._r, self._c, [a - b for a, b in zip(self._d, other._d)])

    def __neg__(self):
        return Matrix(self._r, self._c, [-a for a in self._d])

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for the matrix product")
        return Matrix(self._r, self._c, [a * scalar for a in self._d])

    def __rmul__(self, scalar):
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for the matrix product")
        return Matrix(self._r, self._c, [scalar * a for a in self._d])

    def __truediv__(self, scalar):
        return Matrix(self._r, self._c, [a / scalar for a in self._d])

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._c != other._r:
            raise ValueError(
                f"cannot multiply {self._r}x{self._c} by {other._r}x{other._c}"
            )
        n, k, m = self._r, self._c, other._c
        a, b = self._d, other._d
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                acc = 0
                for t in range(k):
                    acc = acc + arow[t] * b[t * m + j]
                out.append(acc)
        return Matrix(n, m, out)

    def transpose(self) -> "Matrix":
        d = self._d
        c = self._c
        return Matrix(c, self._r, [d[i * c + j] for j in range(c) for i in range(self._r)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def block(self, r: int, i: int, j: int) -> "Matrix":
        """The r x r contiguous submatrix starting at row i, column j (1-based)."""
        if r < 1:
            raise ValueError("block size must be at least 1")
        if not (1 <= i <= self._r - r + 1 and 1 <= j <= self._c - r + 1):
            raise ValueError(
                f"block (r={r}, i={i}, j={j}) outside a {self._r}x{self._c} matrix"
            )
        c = self._c
        d = self._d
        out = []
        for p in range(i - 1, i - 1 + r):
            out.extend(d[p * c + j - 1: p * c + j - 1 + r])
        return Matrix(r, r, out)

    def map(self, fn) -> "Matrix":
        return Matrix(self._r, self._c, [fn(a) for a in self._d])

    def __str__(self):
        rows = self.to_rows()
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in rows)

    def __repr__(self):
        return f"Matrix({self._r}x{self._c})"

    def _same_shape(self, other: "Matrix"):
        if self._r != other._r or self._c != other._c:
            raise ValueError(
                f"shape mismatch: {self._r}x{self._c} vs {other._r}x{other._c}"
            )


@dataclass(frozen=True)
class ToeplitzSpec:
    """Order n plus the 2n-1 diagonal constants c_{-(n-1)}..c_{n-1}; the built
    matrix has a_{ij} = c_{j-i}."""

    n: int
    diags: tuple

    def __post_init__(self):
        object.__setattr__(self, "diags", tuple(self.diags))
        if self.n < 1:
            raise ValueError("order must be at least 1")
        if len(self.diags) != 2 * self.n - 1:
            raise ValueError(
                f"diags: expected {2 * self.n - 1} constants, got {len(self.diags)}"
            )


def toeplitz_build(spec: ToeplitzSpec) -> Matrix:
    n = spec.n
    d = spec.diags
    return Matrix(n, n, [d[j - i + n - 1] for i in range(n) for j in range(n)])


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix(rows, cols, [0] * (rows * cols))


def identity(n: int) -> Matrix:
    return Matrix(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])


def ones(n: int) -> Matrix:
    return Matrix(n, n, [1] * (n * n))


def lower_shift(n: int) -> Matrix:
    """Nilpotent L with ones on the subdiagonal: L e_i = e_{i+1}, L^n = 0."""
    return Matrix(n, n, [1 if i == j + 1 else 0 for i in range(n) for j in range(n)])


def generic_skew_toeplitz(n: int) -> Matrix:
    """The generic skew-symmetric Toeplitz matrix over Z[b1..b_{n-1}]: entry
    b_{j-i} above the diagonal, -b_{i-j} below, 0 on it."""
    if n < 2:
        raise ValueError("generic skew Toeplitz needs order >= 2")
    nv = n - 1
    bs = variables(nv)
    zero = MultiPoly.zero(nv)
    data = []
    for i in range(n):
        for j in range(n):
            if j > i:
                data.append(bs[j - i - 1])
            elif j < i:
                data.append(-bs[i - j - 1])
            else:
                data.append(zero)
    return Matrix(n, n, data)


def johnson_family(n: int) -> Matrix:
    """All-ones plus the generic skew Toeplitz matrix: the generic member of
    the family A + A^T = 2 J_n, over Z[b1..b_{n-1}]."""
    if n < 2:
        raise ValueError("the family needs order >= 2")
    return ones(n) + generic_skew_toeplitz(n)


def is_skew_symmetric(a: Matrix) -> bool:
    if not a.is_square:
        return False
    return all(
        a[i, j] == -a[j, i] for i in range(a.rows) for j in range(i, a.cols)
    )


def outer(u, v=None) -> Matrix:
    v = u if v is None else v
    return Matrix(len(u), len(v), [x * y for x in u for y in v])


def matvec(a: Matrix, x) -> list:
    if a.cols != len(x):
        raise ValueError(f"cannot apply {a.rows}x{a.cols} to a vector of {len(x)}")
    out = []
    for i in range(a.rows):
        acc = 0
        for j in range(a.cols):
            acc = acc + a[i, j] * x[j]
        out.append(acc)
    return out


def max_abs(a: Matrix):
    """Largest |entry|; 0 for an empty matrix.  Numeric scalars only."""
    if not a.entries():
        return 0
    return max(abs(x) for x in a.entries())


# -- JSON wire format ---------------------------------------------------
#
# {"rows": n, "cols": n, "scalar": "int|rat|poly|real|complex", "data": [...]}
# with complex entries as [re, im] pairs, rationals as "p/q" strings and
# polynomials as their canonical text form (plus a top-level "nvars").

def _scalar_kind(entries) -> str:
    has = {"complex": False, "float": False, "poly": False, "rat": False}
    for x in entries:
        if isinstance(x, complex):
            has["complex"] = True
        elif isinstance(x, float):
            has["float"] = True
        elif isinstance(x, MultiPoly):
            has["poly"] = True
        elif isinstance(x, Fraction):
            has["rat"] = True
        elif not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"data: unsupported scalar {type(x).__name__}")
    if has["poly"] and (has["complex"] or has["float"] or has["rat"]):
        raise ValueError("data: polynomials cannot mix with non-integer scalars")
    if (has["complex"] or has["float"]) and has["rat"]:
        raise ValueError("data: floating entries cannot mix with rationals")
    if has["complex"]:
        return "complex"
    if has["float"]:
        return "real"
    if has["poly"]:
        return "poly"
    if has["rat"]:
        return "rat"
    return "int"


def matrix_to_json(a: Matrix) -> dict:
    kind = _scalar_kind(a.entries())
    doc = {"rows": a.rows, "cols": a.cols, "scalar": kind}
    if kind == "int":
        doc["data"] = list(a.entries())
    elif kind == "rat":
        doc["data"] = [str(Fraction(x)) for x in a.entries()]
    elif kind == "real":
        doc["data"] = [float(x) for x in a.entries()]
    elif kind == "complex":
        doc["data"] = [[complex(x).real, complex(x).imag] for x in a.entries()]
    else:
        nv = {x.nvars for x in a.entries() if isinstance(x, MultiPoly)}
        if len(nv) != 1:
            raise ValueError("data: inconsistent variable counts in polynomial matrix")
        nvars = nv.pop()
        doc["nvars"] = nvars
        doc["data"] = [
            str(x if isinstance(x, MultiPoly) else MultiPoly.const(x, nvars))
            for x in a.entries()
        ]
    return doc


def matrix_from_json(doc) -> Matrix:
    if not isinstance(doc, dict):
        raise ValueError("document: expected a JSON object")
    for field in ("rows", "cols", "scalar", "data"):
        if field not in doc:
            raise ValueError(f"{field}: missing")
    rows, cols = doc["rows"], doc["cols"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise ValueError("rows/cols: expected non-negative integers")
    kind = doc["scalar"]
    data = doc["data"]
    if not isinstance(data, list):
        raise ValueError("data: expected a list")
    if len(data) != rows * cols:
        raise ValueError(f"data: expected {rows * cols} entries, got {len(data)}")
    if kind == "int":
        if any(not isinstance(x, int) or isinstance(x, bool) for x in data):
            raise ValueError("data: expected integer entries")
        return Matrix(rows, cols, data)
    if kind == "rat":
        try:
            return Matrix(rows, cols, [Fraction(x) for x in data])
        except (ValueError, TypeError):
            raise ValueError("data: expected rational 'p/q' entries") from None
    if kind == "real":
        if any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in data):
            raise ValueError("data: expected real entries")
        return Matrix(rows, cols, [float(x) for x in data])
    if kind == "complex":
        out = []
        for x in data:
            if not isinstance(x, list) or len(x) != 2:
                raise ValueError("data: expected [re, im] pairs")
            out.append(complex(x[0], x[1]))
        return Matrix(rows, cols, out)
    if kind == "poly":
        if "nvars" not in doc:
            raise ValueError("nvars: missing for a polynomial matrix")
        nvars = doc["nvars"]
        if not isinstance(nvars, int) or nvars < 0:
            raise ValueError("nvars: expected a non-negative integer")
        return Matrix(rows, cols, [MultiPoly.parse(x, nvars) for x in data])
    raise ValueError(f"scalar: unknown tag {kind!r}")
