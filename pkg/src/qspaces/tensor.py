"""Matrices over Scalar, Kronecker products and Yang-Baxter verification.

Tensor-pair indices are flattened as (i, k) -> i*n + k throughout the
package; the printed matrices of the catalog follow the same layout.
"""

from __future__ import annotations

from .errors import DimensionMismatch, DivisionByNonUnit, NonSquareTensorDim, SingularTransform
from .reports import ANOMALY, FAIL, PASS, CheckReport
from .scalars import ParameterSet, Scalar


class TensorIndex:
    """Bijection between pairs (i, k) and flat indices over base dimension n."""

    def __init__(self, n):
        self.n = n

    def flat(self, i, k):
        return i * self.n + k

    def pair(self, a):
        return divmod(a, self.n)


class SMatrix:
    """Dense rectangular matrix of Scalars."""

    __slots__ = ("params", "rows", "cols", "entries")

    def __init__(self, params, entries):
        self.params = params
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def zero(cls, params, rows, cols):
        z = Scalar.zero(params)
        return cls(params, [[z for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def identity(cls, params, n):
        z = Scalar.zero(params)
        o = Scalar.one(params)
        return cls(params, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, params, values):
        z = Scalar.zero(params)
        n = len(values)
        return cls(params, [[values[i] if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def with_entry(self, i, j, value):
        out = SMatrix(self.params, self.entries)
        out.entries[i][j] = value
        return out

    def __eq__(self, other):
        if not isinstance(other, SMatrix):
            return NotImplemented
        return (
            self.params == other.params
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __add__(self, other):
        self._shape_check(other, same=True)
        return SMatrix(
            self.params,
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other):
        self._shape_check(other, same=True)
        return SMatrix(
            self.params,
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return SMatrix(
                self.params,
                [[e * other for e in row] for row in self.entries],
            )
        if self.cols != other.rows:
            raise ValueError("incompatible shapes")
        z = Scalar.zero(self.params)
        out = [[z for _ in range(other.cols)] for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.entries[i]
            for k in range(self.cols):
                a = row[k]
                if a.is_zero():
                    continue
                orow = other.entries[k]
                for j in range(other.cols):
                    b = orow[j]
                    if b.is_zero():
                        continue
                    out[i][j] = out[i][j] + a * b
        return SMatrix(self.params, out)

    def _shape_check(self, other, same=False):
        if self.params != other.params:
            raise ValueError("matrices over different parameter sets")
        if same and (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def nonzero_positions(self):
        return [
            (i, j)
            for i in range(self.rows)
            for j in range(self.cols)
            if not self.entries[i][j].is_zero()
        ]

    def inverse(self):
        """Gauss-Jordan inverse; pivots must have invertible body."""
        if self.rows != self.cols:
            raise SingularTransform("only square matrices invert")
        n = self.rows
        a = [list(row) for row in self.entries]
        inv = SMatrix.identity(self.params, n).entries
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col].is_unit():
                    piv = r
                    break
            if piv is None:
                raise SingularTransform("no unit pivot; matrix not invertible")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            try:
                pinv = a[col][col].inverse()
            except DivisionByNonUnit as exc:  # pragma: no cover
                raise SingularTransform(str(exc))
            a[col] = [pinv * e for e in a[col]]
            inv[col] = [pinv * e for e in inv[col]]
            for r in range(n):
                if r == col or a[r][col].is_zero():
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return SMatrix(self.params, inv)

    def base_dim(self):
        """n with rows == n*n, for tensor-square matrices."""
        n = round(self.rows ** 0.5)
        if self.rows != self.cols or n * n != self.rows:
            raise NonSquareTensorDim(f"{self.rows}x{self.cols} is not a tensor square")
        return n


def kron(a: SMatrix, b: SMatrix) -> SMatrix:
    """Kronecker product in the fixed (i, k) -> i*n + k layout."""
    params = a.params
    z = Scalar.zero(params)
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [[z for _ in range(cols)] for _ in range(rows)]
    for i in range(a.rows):
        for j in range(a.cols):
            e = a.entries[i][j]
            if e.is_zero():
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    f = b.entries[k][l]
                    if f.is_zero():
                        continue
                    out[i * b.rows + k][j * b.cols + l] = e * f
    return SMatrix(params, out)


def permutation_matrix(params: ParameterSet, n: int) -> SMatrix:
    """Flip operator P(u tensor v) = v tensor u on the tensor square."""
    if n < 1:
        raise ValueError("n must be >= 1")
    z = Scalar.zero(params)
    o = Scalar.one(params)
    out = [[z for _ in range(n * n)] for _ in range(n * n)]
    for i in range(n):
        for k in range(n):
            out[i * n + k][k * n + i] = o
    return SMatrix(params, out)


def rhat(r: SMatrix) -> SMatrix:
    """P composed with R (row-pair swap of R)."""
    n = r.base_dim()
    return permutation_matrix(r.params, n) * r


def _sign_dressed(r: SMatrix, parities) -> SMatrix:
    """Multiply row (i, k) by (-1)^{p_i p_k}; converts graded YBE to plain."""
    n = r.base_dim()
    out = [list(row) for row in r.entries]
    for i in range(n):
        for k in range(n):
            if parities[i] and parities[k]:
                out[i * n + k] = [-e for e in out[i * n + k]]
    return SMatrix(r.params, out)


def _plain_residual(r: SMatrix) -> SMatrix:
    n = r.base_dim()
    params = r.params
    eye = SMatrix.identity(params, n)
    r12 = kron(r, eye)
    r23 = kron(eye, r)
    pi = kron(permutation_matrix(params, n), eye)
    r13 = pi * r23 * pi
    return r12 * r13 * r23 - r23 * r13 * r12


def verify_ybe(r: SMatrix, parities=None, form="auto", label="R") -> CheckReport:
    """Check R12 R13 R23 = R23 R13 R12 exactly.

    For matrices with odd parities the graded form of the identity is the
    row sign-dressing (-1)^{p_i p_k}; form='auto' accepts either and the
    report says which one verified.
    """
    from .expressions import format_scalar

    n = r.base_dim()
    if parities is not None and len(parities) != n:
        raise DimensionMismatch(f"parity vector length {len(parities)} != {n}")
    graded_possible = parities is not None and any(parities)
    forms = []
    if form in ("auto", "plain"):
        forms.append(("plain", r))
    if graded_possible and form in ("auto", "graded"):
        forms.append(("graded", _sign_dressed(r, parities)))
    if not forms:
        raise ValueError(f"form {form!r} needs a parity vector with odd entries")
    last_res = None
    for name, mat in forms:
        res = _plain_residual(mat)
        if res.is_zero():
            return CheckReport(
                kind="ybe",
                objects=(label,),
                result=PASS,
                notes=(f"verified in {name} form",),
            )
        last_res = (name, res)
    name, res = last_res
    residuals = tuple(
        (f"[{i},{j}]", format_scalar(res.entries[i][j]))
        for i, j in res.nonzero_positions()
    )
    return CheckReport(
        kind="ybe",
        objects=(label,),
        result=FAIL,
        residuals=residuals,
        notes=(f"last form tried: {name}",),
    )


def conjugate_R(r: SMatrix, d: SMatrix) -> SMatrix:
    """(d tensor d)^-1 . r . (d tensor d)."""
    n = r.base_dim()
    if d.rows != n or d.cols != n:
        raise DimensionMismatch(f"conjugating matrix must be {n}x{n}")
    dd = kron(d, d)
    try:
        ddi = dd.inverse()
    except SingularTransform:
        raise SingularTransform("d tensor d is not invertible")
    return ddi * r * dd
