"""Exact arithmetic in cyclotomic fields Q(zeta_N), plus exact linear algebra.

Elements are kept in the power basis of Q[x]/Phi_N(x), so zero tests and
equality are exact coefficient comparisons.  Values of different conductor
are rebased to the least common multiple before they are combined.  All
objects here are immutable once constructed and safe to share freely.

Floating-point only ever appears in :func:`embed_numeric`, which is a
display/diagnostic aid and never feeds a correctness decision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Rational",
    "Cyclotomic",
    "CycMatrix",
    "ExactNumError",
    "cyclotomic_polynomial",
    "phi_degree",
    "zeta",
    "root_of_unity",
    "embed_numeric",
    "matrix_rank_det",
]

Rational = Fraction

Scalar = Union[int, Fraction, "Cyclotomic"]


class ExactNumError(ValueError):
    """Arithmetic misuse: bad conductor, division by zero, non-rational cast."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (dense, constant term first)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_div_exact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    # den is monic; the division must be exact
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        coef = num[k + dd]
        out[k] = coef
        if coef:
            for j in range(dd + 1):
                num[k + j] -= coef * den[j]
    if any(num[:dd]):
        raise ExactNumError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ExactNumError(f"conductor must be a positive integer, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def phi_degree(n: int) -> int:
    """Degree of Phi_n, i.e. Euler's totient of n."""
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """x^j mod Phi_n for deg(Phi_n) <= j < n, as integer coefficient rows."""
    poly = cyclotomic_polynomial(n)
    deg = len(poly) - 1
    rows: list[tuple[int, ...]] = []
    cur = [-c for c in poly[:deg]]
    rows.append(tuple(cur))
    for _ in range(deg + 1, n):
        top = cur[deg - 1] if deg else 0
        cur = [0] + cur[: deg - 1]
        if top:
            base = rows[0]
            cur = [cur[i] + top * base[i] for i in range(deg)]
        rows.append(tuple(cur))
    return tuple(rows)


# ---------------------------------------------------------------------------


class Cyclotomic:
    """An element of Q(zeta_N) in the power basis of Q[x]/Phi_N(x).

    ``conductor`` is N; ``_coeffs`` maps exponent -> nonzero Fraction with
    exponents in [0, phi(N)).  Treated as immutable.
    """

    __slots__ = ("conductor", "_coeffs")

    def __init__(self, conductor: int, coeffs: Mapping[int, Fraction | int], *, _canonical: bool = False):
        if conductor < 1:
            raise ExactNumError(f"conductor must be positive, got {conductor}")
        object.__setattr__(self, "conductor", conductor)
        if _canonical:
            object.__setattr__(self, "_coeffs", dict(coeffs))
        else:
            raw = {int(e): Fraction(c) for e, c in coeffs.items()}
            object.__setattr__(self, "_coeffs", _reduce_coeffs(conductor, raw))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "Cyclotomic":
        q = Fraction(value)
        return cls(1, {0: q} if q else {}, _canonical=True)

    # -- basic queries

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_rational(self) -> bool:
        return all(e == 0 for e in self._coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ExactNumError(f"{self} is not rational")
        return self._coeffs.get(0, Fraction(0))

    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- conductor handling

    def rebased(self, m: int) -> "Cyclotomic":
        """The same value expressed at conductor m (m must be a multiple)."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ExactNumError(f"cannot rebase conductor {n} to non-multiple {m}")
        k = m // n
        return Cyclotomic(m, {e * k: c for e, c in self._coeffs.items()})

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        m = math.lcm(a.conductor, b.conductor)
        return a.rebased(m), b.rebased(m)

    # -- arithmetic

    @staticmethod
    def _coerce(value: Scalar) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.from_rational(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> "Cyclotomic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._common(self, o)
        out = dict(a._coeffs)
        for e, c in b._coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Cyclotomic(a.conductor, out, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, {e: -c for e, c in self._coeffs.items()}, _canonical=True)

    def __sub__(self, other: Scalar) -> "Cyclotomic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "Cyclotomic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_rational and o.conductor == 1:
            q = o._coeffs.get(0, Fraction(0))
            if not q:
                return Cyclotomic.from_rational(0)
            return Cyclotomic(self.conductor, {e: c * q for e, c in self._coeffs.items()}, _canonical=True)
        if self.is_rational and self.conductor == 1:
            return o * self
        a, b = self._common(self, o)
        raw: dict[int, Fraction] = {}
        n = a.conductor
        for e1, c1 in a._coeffs.items():
            for e2, c2 in b._coeffs.items():
                e = (e1 + e2) % n
                raw[e] = raw.get(e, Fraction(0)) + c1 * c2
        return Cyclotomic(n, raw)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero:
            raise ExactNumError("division by zero")
        if self.is_rational:
            return Cyclotomic.from_rational(1 / self.rational_value())
        n = self.conductor
        deg = phi_degree(n)
        a = [Fraction(0)] * deg
        for e, c in self._coeffs.items():
            a[e] = c
        b = [Fraction(c) for c in cyclotomic_polynomial(n)]
        inv = _poly_inverse_mod(a, b)
        return Cyclotomic(n, {i: c for i, c in enumerate(inv) if c}, _canonical=True)

    def __truediv__(self, other: Scalar) -> "Cyclotomic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> "Cyclotomic":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugate (zeta -> zeta^{-1})."""
        n = self.conductor
        return Cyclotomic(n, {(n - e) % n: c for e, c in self._coeffs.items()})

    # -- comparison / hashing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(self, other)
        return a._coeffs == b._coeffs

    __hash__ = None  # type: ignore[assignment]  # semantic equality crosses conductors

    # -- rendering / serialization

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for e in sorted(self._coeffs):
            c = self._coeffs[e]
            if e == 0:
                term = str(c)
            else:
                pow_txt = f"z{self.conductor}" if e == 1 else f"z{self.conductor}^{e}"
                if c == 1:
                    term = pow_txt
                elif c == -1:
                    term = f"-{pow_txt}"
                else:
                    term = f"{c}*{pow_txt}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self!s})"

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "terms": [[e, _fraction_str(self._coeffs[e])] for e in sorted(self._coeffs)],
        }

    @classmethod
    def from_dict(cls, obj: Mapping) -> "Cyclotomic":
        try:
            conductor = obj["conductor"]
            terms = obj["terms"]
        except (KeyError, TypeError) as exc:
            raise ExactNumError(f"malformed cyclotomic value: {obj!r}") from exc
        if not isinstance(conductor, int) or not isinstance(terms, list):
            raise ExactNumError(f"malformed cyclotomic value: {obj!r}")
        raw: dict[int, Fraction] = {}
        for item in terms:
            if not isinstance(item, (list, tuple)) or len(item) != 2 or not isinstance(item[0], int):
                raise ExactNumError(f"malformed cyclotomic term: {item!r}")
            e, coef = item
            raw[e] = raw.get(e, Fraction(0)) + parse_fraction(coef)
        return cls(conductor, raw)


def _reduce_coeffs(n: int, raw: Mapping[int, Fraction]) -> dict[int, Fraction]:
    deg = phi_degree(n)
    dense = [Fraction(0)] * deg
    rows = None
    for e, coef in raw.items():
        if not coef:
            continue
        e %= n
        if e < deg:
            dense[e] += coef
        else:
            if rows is None:
                rows = _reduction_rows(n)
            row = rows[e - deg]
            for i, ri in enumerate(row):
                if ri:
                    dense[i] += coef * ri
    return {i: c for i, c in enumerate(dense) if c}


def _poly_inverse_mod(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo the (irreducible) modulus, by extended Euclid."""

    def trim(p: list[Fraction]) -> list[Fraction]:
        while p and not p[-1]:
            p.pop()
        return p

    def divmod_poly(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
        num = num[:]
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        lead = den[-1]
        for k in range(len(q) - 1, -1, -1):
            coef = num[k + len(den) - 1] / lead
            q[k] = coef
            if coef:
                for j, dj in enumerate(den):
                    num[k + j] -= coef * dj
        return trim(q), trim(num[: len(den) - 1])

    r0, r1 = trim(modulus[:]), trim(a[:])
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        # s_new = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        s_new = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            s_new[i] += c
        for i, c in enumerate(prod):
            s_new[i] -= c
        s0, s1 = s1, trim(s_new)
    if len(r0) != 1:
        raise ExactNumError("element is a zero divisor; cyclotomic modulus not coprime")
    g = r0[0]
    return [c / g for c in s0]


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: object) -> Fraction:
    """Parse 'a/b' or 'a' (also accepts ints); rejects floats."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ExactNumError(f"malformed rational: {text!r}") from exc
    raise ExactNumError(f"malformed rational: {text!r}")


def zeta(n: int, e: int = 1) -> Cyclotomic:
    """The root of unity zeta_n^e."""
    if n < 1:
        raise ExactNumError(f"conductor must be positive, got {n}")
    return Cyclotomic(n, {e % n: Fraction(1)})


def root_of_unity(t: Fraction | int) -> Cyclotomic:
    """e^{2 pi i t} for rational t, as an exact cyclotomic value."""
    t = Fraction(t) % 1
    return zeta(t.denominator, t.numerator)


def embed_numeric(value: Cyclotomic, digits: int = 15) -> complex:
    """Floating approximation at the principal embedding zeta_N = e^{2 pi i/N}.

    Diagnostic only: results are never authoritative and never feed checks.
    """
    import mpmath

    with mpmath.workdps(max(digits, 3) + 10):
        n = value.conductor
        acc = mpmath.mpc(0)
        for e, c in value.coefficients().items():
            w = mpmath.expjpi(mpmath.mpf(2 * e) / n)
            acc += w * mpmath.mpf(c.numerator) / c.denominator
        return complex(acc)


# ---------------------------------------------------------------------------


class CycMatrix:
    """Dense matrix over a single cyclotomic field, with exact rank and det."""

    __slots__ = ("rows", "cols", "conductor", "entries")

    def __init__(self, entries: Iterable[Iterable[Scalar]], shape: tuple[int, int] | None = None):
        grid = [[Cyclotomic._coerce(x) for x in row] for row in entries]
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(r) != cols for r in grid):
            raise ExactNumError("ragged matrix")
        if shape is not None:
            # explicit shape lets degenerate (0 x n) matrices keep their width
            srows, scols = shape
            if rows and cols and (srows, scols) != (rows, cols):
                raise ExactNumError(f"shape {shape} contradicts entries {rows}x{cols}")
            if srows < 0 or scols < 0 or (srows and cols == 0 and scols and rows):
                raise ExactNumError(f"bad shape {shape}")
            if rows == 0 or cols == 0:
                rows, cols = srows, scols
                grid = [[] for _ in range(rows)] if cols == 0 else []
                if cols and rows:
                    raise ExactNumError(f"shape {shape} requires entries")
        conductor = 1
        for row in grid:
            for x in row:
                conductor = math.lcm(conductor, x.conductor)
        grid = [tuple(x.rebased(conductor) for x in row) for row in grid]
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "entries", tuple(grid))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, key: tuple[int, int]) -> Cyclotomic:
        i, j = key
        return self.entries[i][j]

    def __iter__(self) -> Iterator[tuple[Cyclotomic, ...]]:
        return iter(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.rows)
            for j in range(self.cols)
        )

    __hash__ = None  # type: ignore[assignment]

    def transpose(self) -> "CycMatrix":
        return CycMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            shape=(self.cols, self.rows),
        )

    def __neg__(self) -> "CycMatrix":
        return CycMatrix([[-x for x in row] for row in self.entries], shape=(self.rows, self.cols))

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows:
            raise ExactNumError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = Cyclotomic.from_rational(0)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not (a.is_zero or b.is_zero):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return CycMatrix(out, shape=(self.rows, other.cols))

    def scaled(self, factor: Scalar) -> "CycMatrix":
        return CycMatrix([[x * factor for x in row] for row in self.entries], shape=(self.rows, self.cols))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "CycMatrix":
        return CycMatrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx],
            shape=(len(row_idx), len(col_idx)),
        )

    def hstack(self, other: "CycMatrix") -> "CycMatrix":
        if self.rows != other.rows:
            raise ExactNumError("row count mismatch in hstack")
        return CycMatrix(
            [list(a) + list(b) for a, b in zip(self.entries, other.entries)],
            shape=(self.rows, self.cols + other.cols),
        )

    def is_zero(self) -> bool:
        return all(x.is_zero for row in self.entries for x in row)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def rank_det(self) -> tuple[int, Cyclotomic | None]:
        """Exact rank, and determinant for square matrices (None otherwise).

        A 0x0 matrix has rank 0 and determinant 1 (empty product).
        """
        work = [list(row) for row in self.entries]
        rank = 0
        swaps = 0
        pivots: list[Cyclotomic] = []
        for col in range(self.cols):
            if rank == self.rows:
                break
            prow = next((r for r in range(rank, self.rows) if not work[r][col].is_zero), None)
            if prow is None:
                continue
            if prow != rank:
                work[rank], work[prow] = work[prow], work[rank]
                swaps += 1
            piv = work[rank][col]
            pivots.append(piv)
            inv = piv.inverse()
            for r in range(rank + 1, self.rows):
                f = work[r][col]
                if not f.is_zero:
                    factor = f * inv
                    work[r] = [work[r][c] - factor * work[rank][c] for c in range(self.cols)]
            rank += 1
        det: Cyclotomic | None = None
        if self.rows == self.cols:
            if rank < self.rows:
                det = Cyclotomic.from_rational(0)
            else:
                det = Cyclotomic.from_rational(1)
                for p in pivots:
                    det = det * p
                if swaps % 2:
                    det = -det
        return rank, det

    def to_lists(self) -> list[list[Cyclotomic]]:
        return [list(row) for row in self.entries]

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_dict() for x in row] for row in self.entries],
        }

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"CycMatrix({self.rows}x{self.cols}: {body})"


def matrix_rank_det(matrix: CycMatrix) -> tuple[int, Cyclotomic | None]:
    """Exact (rank, det) of a cyclotomic matrix; det is None when non-square."""
    return matrix.rank_det()
