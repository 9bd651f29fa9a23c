"""Neveu-Schwarz Verma modules: straightening, bases, singular vectors.

The NS algebra here has even modes L_m (integer index) and odd modes G_r
(half-odd index) with brackets

    [L_m, L_n] = (m - n) L_{m+n} + (c/12)(m^3 - m) delta_{m+n,0}
    [L_m, G_r] = (m/2 - r) G_{m+r}
    {G_r, G_s} = 2 L_{r+s} + (c/3)(r^2 - 1/4) delta_{r+s,0}

acting on a highest-weight vector v with L_0 v = h v and L_n v = G_r v = 0
for n, r > 0.  Vectors are stored on the PBW basis: words
G_{g_1}..G_{g_k} L_{n_1}..L_{n_l} v with g_1 < .. < g_k <= -1/2 strictly
increasing half-odd indices and -1 >= n_1 >= .. >= n_l weakly decreasing
integers.  Everything is exact rational arithmetic.

Straightening is a terminating rewriting system on words; any admissible
choice of rewrite position yields the same normal form, which tests exploit
by shuffling the choice.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .exactnum import _fraction_str

__all__ = [
    "NSMode",
    "L",
    "G",
    "PBWMonomial",
    "VermaVector",
    "VermaError",
    "parse_monomial",
    "filtration_key",
    "straighten",
    "apply_mode",
    "apply_word",
    "degree_basis",
    "SingularVectorReport",
    "expected_leading_shape",
    "singular_vectors",
    "verify_minimal_singular_vector",
    "c2_generators",
]


class VermaError(ValueError):
    """Bad mode indices, malformed monomials, or failed structure assertions."""


class NSMode(NamedTuple):
    """One algebra mode: kind "L" with integer index or "G" with half-odd index."""

    kind: str
    index: Fraction


def L(n: int) -> NSMode:
    if not isinstance(n, int):
        raise VermaError(f"L index must be an integer, got {n!r}")
    return NSMode("L", Fraction(n))


def G(r: Fraction | str) -> NSMode:
    r = Fraction(r)
    if r.denominator != 2:
        raise VermaError(f"G index must be half an odd integer, got {r}")
    return NSMode("G", r)


# ---------------------------------------------------------------------------
# PBW monomials


@dataclass(frozen=True)
class PBWMonomial:
    """Normal word acting on the highest-weight vector.

    ``g_part``: strictly increasing half-odd indices <= -1/2.
    ``l_part``: weakly decreasing integer indices <= -1.
    """

    g_part: tuple[Fraction, ...] = ()
    l_part: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for r in self.g_part:
            if not isinstance(r, Fraction) or r.denominator != 2 or r > Fraction(-1, 2):
                raise VermaError(f"bad G index {r!r} in monomial")
        for a, b in zip(self.g_part, self.g_part[1:]):
            if not a < b:
                raise VermaError(f"G indices must strictly increase, got {self.g_part}")
        for n in self.l_part:
            if not isinstance(n, int) or n > -1:
                raise VermaError(f"bad L index {n!r} in monomial")
        for a, b in zip(self.l_part, self.l_part[1:]):
            if not a >= b:
                raise VermaError(f"L indices must weakly decrease, got {self.l_part}")

    @property
    def degree(self) -> Fraction:
        return -(sum(self.g_part, Fraction(0)) + sum(self.l_part))

    @property
    def parity(self) -> int:
        return len(self.g_part) % 2

    @property
    def in_vprime(self) -> bool:
        """Whether the monomial misses G_{-1/2} and L_{-1} entirely."""
        return all(r <= Fraction(-3, 2) for r in self.g_part) and all(
            n <= -2 for n in self.l_part
        )

    def word(self) -> tuple[NSMode, ...]:
        return tuple(NSMode("G", r) for r in self.g_part) + tuple(
            NSMode("L", Fraction(n)) for n in self.l_part
        )

    def to_text(self) -> str:
        if not self.g_part and not self.l_part:
            return "1"
        parts = [f"G[{r}]" for r in self.g_part] + [f"L[{n}]" for n in self.l_part]
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


_TOKEN = re.compile(r"\s*(G|L)\[(-?\d+(?:/\d+)?)\]\s*")


def parse_monomial(text: str) -> PBWMonomial:
    """Parse the factor syntax, e.g. "G[-5/2] G[-3/2] L[-2]"; "1" is empty."""
    text = text.strip()
    if text == "1" or not text:
        return PBWMonomial()
    pos = 0
    g: list[Fraction] = []
    l: list[int] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise VermaError(f"malformed monomial text at {text[pos:]!r}")
        kind, idx = m.group(1), Fraction(m.group(2))
        if kind == "G":
            if l:
                raise VermaError("G factors must precede L factors")
            g.append(idx)
        else:
            if idx.denominator != 1:
                raise VermaError(f"L index must be an integer, got {idx}")
            l.append(int(idx))
        pos = m.end()
    return PBWMonomial(tuple(g), tuple(l))


def filtration_key(mon: PBWMonomial, width: int | None = None) -> tuple[int, ...]:
    """Comparison key (alpha_0, alpha_1, ..): total count, then the number of
    factors of index -1 - i/2 for each i >= 1.

    Monomials of equal degree compare with the same default width.
    """
    if width is None:
        width = max(int(2 * mon.degree) - 2, 0)
    counts = [0] * (width + 1)
    counts[0] = len(mon.g_part) + len(mon.l_part)
    for idx in list(mon.g_part) + [Fraction(n) for n in mon.l_part]:
        i = int(-2 * idx - 2)
        if 1 <= i <= width:
            counts[i] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# vectors


@dataclass(frozen=True)
class VermaVector:
    """Exact element of the Verma module with parameters (c, h).

    ``terms`` maps PBW monomials to nonzero rational coefficients; treat it
    as immutable.
    """

    c: Fraction
    h: Fraction
    terms: Mapping[PBWMonomial, Fraction]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[Fraction]:
        return {mon.degree for mon in self.terms}

    @property
    def degree(self) -> Fraction:
        degs = self.degrees()
        if len(degs) != 1:
            raise VermaError(f"vector is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def coefficient(self, mon: PBWMonomial) -> Fraction:
        return self.terms.get(mon, Fraction(0))

    def scaled(self, factor: Fraction) -> "VermaVector":
        factor = Fraction(factor)
        if not factor:
            return VermaVector(self.c, self.h, {})
        return VermaVector(self.c, self.h, {m: cf * factor for m, cf in self.terms.items()})

    def __add__(self, other: "VermaVector") -> "VermaVector":
        if (self.c, self.h) != (other.c, other.h):
            raise VermaError("cannot add vectors from different modules")
        out = dict(self.terms)
        for m, cf in other.terms.items():
            s = out.get(m, Fraction(0)) + cf
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return VermaVector(self.c, self.h, out)

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + other.scaled(Fraction(-1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VermaVector):
            return NotImplemented
        return (self.c, self.h) == (other.c, other.h) and dict(self.terms) == dict(other.terms)

    def sorted_terms(self) -> list[tuple[PBWMonomial, Fraction]]:
        """Terms ordered by descending filtration, ties broken on the parts."""
        degs = self.degrees()
        width = max((max(int(2 * d) - 2, 0) for d in degs), default=0)
        return sorted(
            self.terms.items(),
            key=lambda item: (filtration_key(item[0], width), item[0].g_part, item[0].l_part),
            reverse=True,
        )

    def to_json_list(self) -> list[dict]:
        return [
            {"monomial": mon.to_text(), "coeff": _fraction_str(cf)}
            for mon, cf in self.sorted_terms()
        ]

    @classmethod
    def from_json_list(cls, c: Fraction, h: Fraction, items: Iterable[Mapping]) -> "VermaVector":
        from .exactnum import parse_fraction

        terms: dict[PBWMonomial, Fraction] = {}
        for item in items:
            mon = parse_monomial(item["monomial"])
            cf = parse_fraction(item["coeff"])
            if cf:
                terms[mon] = terms.get(mon, Fraction(0)) + cf
        return cls(Fraction(c), Fraction(h), {m: cf for m, cf in terms.items() if cf})


# ---------------------------------------------------------------------------
# straightening engine

Word = tuple[NSMode, ...]


def _mode_key(mode: NSMode) -> tuple:
    kind, idx = mode
    if idx < 0:
        if kind == "G":
            return (0, idx)
        return (1, -idx)
    # nonnegative modes drift right, smaller index first, so they die against v
    return (2, idx, 0 if kind == "L" else 1)


def _reducible_positions(word: Word) -> list[int]:
    """Positions where a rewrite applies; len(word)-1 flags the terminal rule."""
    out = []
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        if x.kind == "G" and y.kind == "G" and x.index == y.index:
            out.append(i)
        elif _mode_key(x) > _mode_key(y):
            out.append(i)
    if word and word[-1].index >= 0:
        out.append(len(word) - 1)
    return out


def _rewrite_at(word: Word, i: int, c: Fraction, h: Fraction) -> list[tuple[Word, Fraction]]:
    """Expand one rewrite; every output word is strictly closer to normal."""
    if i == len(word) - 1:
        # terminal rule against the highest-weight vector
        last = word[-1]
        rest = word[:-1]
        if last.kind == "L" and last.index == 0:
            return [(rest, h)] if h else []
        return []  # positive mode annihilates v

    x, y = word[i], word[i + 1]
    head, tail = word[:i], word[i + 2 :]
    out: list[tuple[Word, Fraction]] = []
    a, b = x.index, y.index

    if x.kind == "G" and y.kind == "G":
        if a == b:
            # G_a G_a = L_{2a}; the central term needs 2a = 0, impossible
            out.append((head + (NSMode("L", 2 * a),) + tail, Fraction(1)))
        else:
            out.append((head + (y, x) + tail, Fraction(-1)))
            out.append((head + (NSMode("L", a + b),) + tail, Fraction(2)))
            if a + b == 0:
                central = (c / 3) * (a * a - Fraction(1, 4))
                if central:
                    out.append((head + tail, central))
    elif x.kind == "L" and y.kind == "L":
        out.append((head + (y, x) + tail, Fraction(1)))
        coef = a - b
        if coef:
            out.append((head + (NSMode("L", a + b),) + tail, coef))
        if a + b == 0:
            central = (c / 12) * (a ** 3 - a)
            if central:
                out.append((head + tail, central))
    elif x.kind == "L":
        # L_a G_b = G_b L_a + (a/2 - b) G_{a+b}
        out.append((head + (y, x) + tail, Fraction(1)))
        coef = a / 2 - b
        if coef:
            out.append((head + (NSMode("G", a + b),) + tail, coef))
    else:
        # G_a L_b = L_b G_a + (a - b/2) G_{a+b}
        out.append((head + (y, x) + tail, Fraction(1)))
        coef = a - b / 2
        if coef:
            out.append((head + (NSMode("G", a + b),) + tail, coef))
    return out


def _word_to_monomial(word: Word) -> PBWMonomial:
    g: list[Fraction] = []
    l: list[int] = []
    for mode in word:
        if mode.kind == "G":
            g.append(mode.index)
        else:
            l.append(int(mode.index))
    return PBWMonomial(tuple(g), tuple(l))


def straighten(
    word: Sequence[NSMode],
    c: Fraction | int,
    h: Fraction | int,
    pick: Callable[[int], int] | None = None,
) -> VermaVector:
    """Normal form of (the word applied to v) on the PBW basis.

    ``pick``, given the number of admissible rewrite positions, chooses which
    to apply; the result is independent of the choice, and the default is the
    leftmost.
    """
    c, h = Fraction(c), Fraction(h)
    for mode in word:
        if mode.kind == "L":
            if mode.index.denominator != 1:
                raise VermaError(f"L index must be integral, got {mode.index}")
        elif mode.kind == "G":
            if mode.index.denominator != 2:
                raise VermaError(f"G index must be half-odd, got {mode.index}")
        else:
            raise VermaError(f"unknown mode kind {mode.kind!r}")

    pending: dict[Word, Fraction] = {tuple(word): Fraction(1)}
    result: dict[PBWMonomial, Fraction] = {}
    while pending:
        w, coeff = pending.popitem()
        spots = _reducible_positions(w)
        if not spots:
            mon = _word_to_monomial(w)
            s = result.get(mon, Fraction(0)) + coeff
            if s:
                result[mon] = s
            else:
                result.pop(mon, None)
            continue
        i = spots[0] if pick is None else spots[pick(len(spots))]
        for w2, cf in _rewrite_at(w, i, c, h):
            s = pending.get(w2, Fraction(0)) + coeff * cf
            if s:
                pending[w2] = s
            else:
                pending.pop(w2, None)
    return VermaVector(c, h, result)


def apply_mode(mode: NSMode, vec: VermaVector) -> VermaVector:
    """The mode acting on an already-normal vector."""
    out = VermaVector(vec.c, vec.h, {})
    for mon, cf in vec.terms.items():
        out = out + straighten((mode,) + mon.word(), vec.c, vec.h).scaled(cf)
    return out


def apply_word(
    word: Sequence[NSMode], c: Fraction | int, h: Fraction | int
) -> VermaVector:
    """Right-to-left fold of modes against v; equals straighten of the word."""
    vec = VermaVector(Fraction(c), Fraction(h), {PBWMonomial(): Fraction(1)})
    for mode in reversed(list(word)):
        vec = apply_mode(mode, vec)
    return vec


# ---------------------------------------------------------------------------
# graded bases


def _g_subsets(budget: Fraction, min_mag: Fraction) -> Iterable[tuple[Fraction, ...]]:
    """Strictly increasing tuples of half-odd magnitudes >= min_mag, by total."""
    yield ()
    mag = min_mag
    while mag <= budget:
        for rest in _g_subsets(budget - mag, mag + 1):
            yield (mag,) + rest
        mag += 1


def _l_partitions(total: int, min_part: int) -> Iterable[tuple[int, ...]]:
    """Weakly increasing tuples of integers >= min_part summing to total."""
    if total == 0:
        yield ()
        return
    part = min_part
    while part <= total:
        for rest in _l_partitions(total - part, part):
            yield (part,) + rest
        part += 1


def degree_basis(d: Fraction | int, restrict_vprime: bool = False) -> list[PBWMonomial]:
    """All PBW monomials of the given degree, sorted by descending filtration.

    With ``restrict_vprime`` only monomials avoiding G_{-1/2} and L_{-1} are
    produced (the monomial basis of the quotient module).
    """
    d = Fraction(d)
    if d < 0 or (2 * d).denominator != 1:
        raise VermaError(f"degree must be a nonnegative half-integer, got {d}")
    g_min = Fraction(3, 2) if restrict_vprime else Fraction(1, 2)
    l_min = 2 if restrict_vprime else 1
    out: list[PBWMonomial] = []
    for mags in _g_subsets(d, g_min):
        rem = d - sum(mags, Fraction(0))
        if rem.denominator != 1:
            continue
        g_part = tuple(-m for m in reversed(mags))
        for lparts in _l_partitions(int(rem), l_min):
            l_part = tuple(-x for x in lparts)
            out.append(PBWMonomial(g_part, l_part))
    width = max(int(2 * d) - 2, 0)
    out.sort(
        key=lambda m: (filtration_key(m, width), m.g_part, m.l_part), reverse=True
    )
    return out


# ---------------------------------------------------------------------------
# rational linear algebra (plain lists of Fractions)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        prow = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if prow is None:
            continue
        rows[r], rows[prow] = rows[prow], rows[r]
        piv = rows[r][col]
        rows[r] = [x / piv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    del rows[r:]
    return rows, pivots


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace, one vector per free column."""
    work = [row[:] for row in rows if any(row)]
    work, pivots = _rref(work)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pcol in zip(work, pivots):
            vec[pcol] = -prow[fc]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# singular vectors


@dataclass(frozen=True)
class SingularVectorReport:
    """Singular vectors of one degree slice, before and after the quotient.

    ``vector`` is the quotient representative on the restricted monomial
    basis when the space is one-dimensional, normalized to unit leading
    coefficient.  ``full_vector`` is a matching preimage in the full module,
    kept for independent re-checking; it is not part of the JSON form.
    """

    c: Fraction
    h: Fraction
    degree: Fraction
    full_space_dim: int
    space_dim: int
    vector: VermaVector | None
    full_vector: VermaVector | None
    leading_monomial: PBWMonomial | None
    lambda_coeff: Fraction | None
    shape_ok: bool | None

    def to_dict(self) -> dict:
        return {
            "c": _fraction_str(self.c),
            "h": _fraction_str(self.h),
            "degree": str(self.degree),
            "full_space_dim": self.full_space_dim,
            "space_dim": self.space_dim,
            "vector": None if self.vector is None else self.vector.to_json_list(),
            "leading_monomial": None
            if self.leading_monomial is None
            else self.leading_monomial.to_text(),
            "lambda": None if self.lambda_coeff is None else _fraction_str(self.lambda_coeff),
            "shape_ok": self.shape_ok,
        }


def expected_leading_shape(d: Fraction) -> PBWMonomial | None:
    """The predicted leading monomial of the degree-d minimal-model vector.

    Even integer degree: G_{-5/2} G_{-3/2} (L_{-2})^{(d-4)/2}; half-odd
    degree with 2d = 3 mod 4: G_{-3/2} (L_{-2})^{(2d-3)/4}.  None when the
    degree fits neither template.
    """
    d = Fraction(d)
    if d.denominator == 1 and d % 2 == 0 and d >= 4:
        k = (int(d) - 4) // 2
        return PBWMonomial((Fraction(-5, 2), Fraction(-3, 2)), (-2,) * k)
    if d.denominator == 2 and (2 * d - 3) % 4 == 0 and d >= Fraction(3, 2):
        k = int((2 * d - 3) // 4)
        return PBWMonomial((Fraction(-3, 2),), (-2,) * k)
    return None


def singular_vectors(c: Fraction | int, h: Fraction | int, d: Fraction | int) -> SingularVectorReport:
    """Degree-d vectors killed by G_{1/2} and G_{3/2}, and their quotient image.

    The quotient is by the degree-d slice of the submodule generated by
    G_{-1/2} v, spanned by straightened u G_{-1/2} v over PBW monomials u of
    degree d - 1/2.  Reduction pivots prefer the non-restricted monomials, so
    surviving vectors are expressed on the restricted (quotient) basis.
    """
    c, h, d = Fraction(c), Fraction(h), Fraction(d)
    if d <= 0 or (2 * d).denominator != 1:
        raise VermaError(f"degree must be a positive half-integer, got {d}")
    basis = degree_basis(d)
    col_of = {mon: j for j, mon in enumerate(basis)}
    ncols = len(basis)

    # constraint matrix: rows indexed by target monomials of both raising ops
    rows: list[list[Fraction]] = []
    row_of: dict[tuple[str, PBWMonomial], int] = {}
    for op_name, op in (("G1/2", G(Fraction(1, 2))), ("G3/2", G(Fraction(3, 2)))):
        for j, mon in enumerate(basis):
            image = straighten((op,) + mon.word(), c, h)
            for tmon, cf in image.terms.items():
                key = (op_name, tmon)
                if key not in row_of:
                    row_of[key] = len(rows)
                    rows.append([Fraction(0)] * ncols)
                rows[row_of[key]][j] = cf
    null = _nullspace(rows, ncols)
    full_dim = len(null)

    # submodule slice, expressed on the same basis
    sub_rows: list[list[Fraction]] = []
    for u in degree_basis(d - Fraction(1, 2)):
        image = straighten(u.word() + (G(Fraction(-1, 2)),), c, h)
        row = [Fraction(0)] * ncols
        for mon, cf in image.terms.items():
            row[col_of[mon]] = cf
        sub_rows.append(row)

    # reduce everything with pivot preference on the non-quotient monomials
    perm = [j for j, mon in enumerate(basis) if not mon.in_vprime] + [
        j for j, mon in enumerate(basis) if mon.in_vprime
    ]
    n_outside = sum(1 for mon in basis if not mon.in_vprime)
    inv_perm = [0] * ncols
    for newpos, j in enumerate(perm):
        inv_perm[j] = newpos

    sub_p = [[row[j] for j in perm] for row in sub_rows]
    sub_p, sub_pivots = _rref(sub_p)

    def reduce_vec(vec: list[Fraction]) -> list[Fraction]:
        v = [vec[j] for j in perm]
        for prow, pcol in zip(sub_p, sub_pivots):
            f = v[pcol]
            if f:
                v = [a - f * b for a, b in zip(v, prow)]
        return v

    reduced = [reduce_vec(w) for w in null]
    for v in reduced:
        bad = next((pos for pos in range(n_outside) if v[pos]), None)
        if bad is not None:
            raise VermaError(
                "quotient reduction left support outside the restricted basis at "
                f"{basis[perm[bad]].to_text()}"
            )

    quo = [row[:] for row in reduced if any(row)]
    quo_rref, _ = _rref(quo)
    space_dim = len(quo_rref)

    vector = full_vector = leading = lam = None
    shape_ok: bool | None = None
    if space_dim == 1:
        # pick a nullspace vector with nonzero image and normalize the pair
        w, w_red = next((w, r) for w, r in zip(null, reduced) if any(r))
        red_terms = {
            basis[perm[pos]]: cf for pos, cf in enumerate(w_red) if cf
        }
        width = max(int(2 * d) - 2, 0)
        leading = max(
            red_terms,
            key=lambda m: (filtration_key(m, width), m.g_part, m.l_part),
        )
        scale = 1 / red_terms[leading]
        vector = VermaVector(c, h, {m: cf * scale for m, cf in red_terms.items()})
        full_vector = VermaVector(
            c, h, {basis[j]: cf * scale for j, cf in enumerate(w) if cf}
        )
        expected = expected_leading_shape(d)
        if expected is not None and leading == expected:
            if d.denominator == 1:
                lam_mon = PBWMonomial((), (-2,) * (int(d) // 2))
                lam = vector.coefficient(lam_mon)
                shape_ok = bool(lam)
            else:
                shape_ok = True
        else:
            shape_ok = False

    return SingularVectorReport(
        c=c,
        h=h,
        degree=d,
        full_space_dim=full_dim,
        space_dim=space_dim,
        vector=vector,
        full_vector=full_vector,
        leading_monomial=leading,
        lambda_coeff=lam,
        shape_ok=shape_ok,
    )


def verify_minimal_singular_vector(p: int, q: int) -> SingularVectorReport:
    """Solve at (c_{p,q}, h = 0), degree (p-1)(q-1)/2, and assert the shape.

    Raises VermaError when the space is not one-dimensional or the leading
    term does not match the parity-determined template.
    """
    from .minimal import MinimalModelSpec, central_charge

    spec = MinimalModelSpec(p, q)
    d = Fraction((p - 1) * (q - 1), 2)
    report = singular_vectors(central_charge(spec), 0, d)
    if report.space_dim != 1:
        raise VermaError(
            f"expected a one-dimensional singular space at degree {d} for ({p}, {q}), "
            f"got {report.space_dim}"
        )
    if not report.shape_ok:
        raise VermaError(
            f"leading term {report.leading_monomial} does not match the expected "
            f"shape for ({p}, {q}); vector: {report.vector.to_json_list()}"
        )
    return report


def c2_generators(p: int, q: int) -> tuple[list[PBWMonomial], int]:
    """Spanning monomials of the degree-graded quotient by the filtration ideal.

    (L_{-2})^i and G_{-3/2}(L_{-2})^i for 0 <= i < the per-sector label count
    of the (p, q) model; the total is checked against the label census.
    """
    from .minimal import MinimalModelSpec, sector_counts

    spec = MinimalModelSpec(p, q)
    g = (p - 1) * (q - 1)
    bound = g // 4 if p % 2 else (g + 1) // 4
    gens = [PBWMonomial((), (-2,) * i) for i in range(bound)] + [
        PBWMonomial((Fraction(-3, 2),), (-2,) * i) for i in range(bound)
    ]
    ns_count, r_count = sector_counts(spec)
    if len(gens) != ns_count + r_count:
        raise VermaError(
            f"generator count {len(gens)} does not match the label census "
            f"{ns_count} + {r_count} for ({p}, {q})"
        )
    return gens, len(gens)
