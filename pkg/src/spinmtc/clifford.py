"""Fermionic structure on a modular tensor category.

Given fusion data with a distinguished invertible label of twist 1/2 (the
"odd" object), this module builds the tensoring involution, the sign
character zeta separating Neveu-Schwarz from Ramond labels, the five-way
label partition, and the exact block-structure checks the s-matrix must
satisfy.  It also tracks the graded Brauer class of small Clifford algebras,
which grades under graded tensor product by generator count mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exactnum import CycMatrix
from .fusion import FusionData, InconsistentDataError, SMatrix

__all__ = [
    "CliffordAlgebraClass",
    "CliffordStructure",
    "LabelClassification",
    "CheckResult",
    "BlockReport",
    "find_vminus",
    "involution_from_vminus",
    "compute_zeta",
    "clifford_structure",
    "classify_labels",
    "verify_block_structure",
    "morita_parity",
]


@dataclass(frozen=True)
class CliffordAlgebraClass:
    """Complex Clifford algebra on a number of odd generators.

    Only the generator count matters here; its parity is the class in the
    graded Brauer group of the complex numbers, which is Z/2.
    """

    generators: int

    def __post_init__(self) -> None:
        if self.generators < 0:
            raise ValueError("generator count must be nonnegative")

    @property
    def parity(self) -> int:
        return self.generators % 2

    def to_dict(self) -> dict:
        return {"generators": self.generators, "parity": self.parity}


def morita_parity(factors: Iterable[CliffordAlgebraClass]) -> CliffordAlgebraClass:
    """Graded tensor product of Clifford algebras: generator counts add."""
    return CliffordAlgebraClass(sum(f.generators for f in factors))


@dataclass(frozen=True)
class CliffordStructure:
    """A chosen odd generator together with its derived structure maps."""

    vminus: str
    sigma_vv: int  # -1: Clifford case; +1: square-root case
    involution: Mapping[str, str]
    zeta: Mapping[str, int]

    @property
    def is_clifford(self) -> bool:
        return self.sigma_vv == -1


@dataclass(frozen=True)
class LabelClassification:
    """Five-way label partition.

    ``ns_minus`` and ``r_minus`` are aligned elementwise with ``ns_plus`` and
    ``r_plus``: entry k of the minus list is the involution image of entry k
    of the plus list.  ``r_zero`` holds the involution fixed points.
    """

    ns_plus: tuple[str, ...]
    ns_minus: tuple[str, ...]
    r_plus: tuple[str, ...]
    r_minus: tuple[str, ...]
    r_zero: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "ns_plus": list(self.ns_plus),
            "ns_minus": list(self.ns_minus),
            "r_plus": list(self.r_plus),
            "r_minus": list(self.r_minus),
            "r_zero": list(self.r_zero),
        }


def find_vminus(data: FusionData) -> list[str]:
    """All non-unit labels that square to the unit alone and have twist 1/2.

    Returned in the input label order.
    """
    out = []
    for lab in data.labels:
        if lab == data.unit:
            continue
        if data.n(lab, lab, data.unit) != 1:
            continue
        total = sum(v for (i, j, _k), v in data.fusion.items() if i == lab and j == lab and v)
        if total != 1:
            continue
        if data.twist[lab] % 1 != Fraction(1, 2):
            continue
        out.append(lab)
    return out


def involution_from_vminus(data: FusionData, vminus: str) -> dict[str, str]:
    """The label involution M -> vminus x M; requires a free action."""
    inv: dict[str, str] = {}
    for lab in data.labels:
        images = [k for k in data.labels if data.n(vminus, lab, k)]
        if len(images) != 1 or data.n(vminus, lab, images[0]) != 1:
            raise InconsistentDataError(
                f"tensoring by {vminus!r} does not permute labels freely at {lab!r}"
            )
        inv[lab] = images[0]
    for lab in data.labels:
        if inv[inv[lab]] != lab:
            raise InconsistentDataError(
                f"tensoring by {vminus!r} is not an involution at {lab!r}"
            )
    return inv


def compute_zeta(data: FusionData, vminus: str) -> dict[str, int]:
    """The sign -theta(vminus x M)/theta(M) for every label M.

    The ratio of twists is an exact root of unity; a value other than +-1
    means the input is not consistent fermionic data.
    """
    inv = involution_from_vminus(data, vminus)
    zeta: dict[str, int] = {}
    for lab in data.labels:
        delta = (data.twist[inv[lab]] - data.twist[lab]) % 1
        if delta == Fraction(1, 2):
            zeta[lab] = 1
        elif delta == 0:
            zeta[lab] = -1
        else:
            raise InconsistentDataError(
                f"twist ratio at {lab!r} is a primitive root e^(2 pi i {delta}), not a sign; "
                f"not consistent fermionic data"
            )
    return zeta


def clifford_structure(data: FusionData, vminus: str) -> CliffordStructure:
    """Bundle the involution and zeta character for a chosen odd generator.

    ``sigma_vv`` defaults to -1 (the Clifford case) when the input does not
    declare it.
    """
    if vminus not in find_vminus(data):
        raise InconsistentDataError(
            f"{vminus!r} is not an admissible odd generator for {data.name!r}"
        )
    inv = involution_from_vminus(data, vminus)
    zeta = compute_zeta(data, vminus)
    sigma = data.sigma_vv if data.sigma_vv is not None else -1
    return CliffordStructure(vminus=vminus, sigma_vv=sigma, involution=inv, zeta=zeta)


def classify_labels(data: FusionData, vminus: str) -> LabelClassification:
    """Partition labels into NS+/NS-/R+/R-/R0 for the chosen odd generator.

    Orbit representatives ("plus" labels) are chosen by input label order.
    The zeta character is checked to be multiplicative across every nonzero
    fusion channel before it is trusted.
    """
    st = clifford_structure(data, vminus)
    if not st.is_clifford:
        raise InconsistentDataError(
            f"{data.name!r} declares self-braiding +1 at {vminus!r}; the label "
            f"partition applies only to the Clifford case"
        )
    zeta, inv = st.zeta, st.involution

    for (i, j, k), v in data.fusion.items():
        if v and zeta[k] != zeta[i] * zeta[j]:
            raise InconsistentDataError(
                f"zeta is not multiplicative on channel {i} x {j} -> {k}"
            )

    ns_plus: list[str] = []
    ns_minus: list[str] = []
    r_plus: list[str] = []
    r_minus: list[str] = []
    r_zero: list[str] = []
    seen: set[str] = set()
    for lab in data.labels:
        if lab in seen:
            continue
        img = inv[lab]
        if img == lab:
            # fixed points have zeta -1 automatically: the twist ratio is 1
            r_zero.append(lab)
            seen.add(lab)
        else:
            plus, minus = (ns_plus, ns_minus) if zeta[lab] == 1 else (r_plus, r_minus)
            plus.append(lab)
            minus.append(img)
            seen.add(lab)
            seen.add(img)
    return LabelClassification(
        ns_plus=tuple(ns_plus),
        ns_minus=tuple(ns_minus),
        r_plus=tuple(r_plus),
        r_minus=tuple(r_minus),
        r_zero=tuple(r_zero),
    )


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: tuple | None = None

    def to_dict(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass(frozen=True)
class BlockReport:
    """Result of the s-matrix block-structure checks.

    Blocks are cut from the s-matrix after reordering rows and columns to
    (NS+, NS-, R+, R-, R0): A is the NS+ x NS+ corner, B is NS+ x R+, C is
    R+ x R+, and D is NS+ x R0.
    """

    block_a: CycMatrix
    block_b: CycMatrix
    block_c: CycMatrix
    block_d: CycMatrix
    checks: Mapping[str, CheckResult]

    @property
    def all_pass(self) -> bool:
        return all(r.ok for r in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "blocks": {
                "A": self.block_a.to_dict(),
                "B": self.block_b.to_dict(),
                "C": self.block_c.to_dict(),
                "D": self.block_d.to_dict(),
            },
            "checks": {name: r.to_dict() for name, r in self.checks.items()},
            "all_pass": self.all_pass,
        }


CHECK_NAMES = (
    "involution_rows",
    "nonsplit_row_vanishing",
    "block_pattern",
    "diagonal_blocks",
    "bd_rank",
    "btd_zero",
    "count_identity",
)


def verify_block_structure(data: FusionData, cls: LabelClassification, s: SMatrix) -> BlockReport:
    """Run the seven exact block checks of the s-matrix against a partition.

    Every check reports a witness on failure; all arithmetic is exact.
    """
    labels = data.labels
    idx = {lab: i for i, lab in enumerate(labels)}
    mat = s.data

    inv_of = {}
    for plus, minus in ((cls.ns_plus, cls.ns_minus), (cls.r_plus, cls.r_minus)):
        for a, b in zip(plus, minus):
            inv_of[a] = b
            inv_of[b] = a
    for lab in cls.r_zero:
        inv_of[lab] = lab

    ns_labels = set(cls.ns_plus) | set(cls.ns_minus)
    checks: dict[str, CheckResult] = {}

    # (1) rows transform by the zeta sign of the column under the involution
    witness = None
    for i in labels:
        for j in labels:
            sign = 1 if j in ns_labels else -1
            lhs = mat[idx[inv_of[i]], idx[j]]
            rhs = mat[idx[i], idx[j]]
            if lhs != (rhs if sign == 1 else -rhs):
                witness = (i, j)
                break
        if witness:
            break
    checks["involution_rows"] = CheckResult(witness is None, witness)

    # (2) fixed-point rows vanish against every Ramond column
    witness = None
    r_all = list(cls.r_plus) + list(cls.r_minus) + list(cls.r_zero)
    for i in cls.r_zero:
        for j in r_all:
            if not mat[idx[i], idx[j]].is_zero:
                witness = (i, j)
                break
        if witness:
            break
    checks["nonsplit_row_vanishing"] = CheckResult(witness is None, witness)

    # block extraction in the canonical order
    groups = {
        "NS+": [idx[x] for x in cls.ns_plus],
        "NS-": [idx[x] for x in cls.ns_minus],
        "R+": [idx[x] for x in cls.r_plus],
        "R-": [idx[x] for x in cls.r_minus],
        "R0": [idx[x] for x in cls.r_zero],
    }

    def sub(g1: str, g2: str) -> CycMatrix:
        return mat.submatrix(groups[g1], groups[g2])

    block_a = sub("NS+", "NS+")
    block_b = sub("NS+", "R+")
    block_c = sub("R+", "R+")
    block_d = sub("NS+", "R0")

    # (3) the full 5x5 block pattern
    bt = block_b.transpose()
    dt = block_d.transpose()
    n_rp, n_r0 = len(groups["R+"]), len(groups["R0"])
    zero_rp_r0 = CycMatrix([[0] * n_r0 for _ in range(n_rp)], shape=(n_rp, n_r0))
    zero_r0_rp = CycMatrix([[0] * n_rp for _ in range(n_r0)], shape=(n_r0, n_rp))
    zero_r0_r0 = CycMatrix([[0] * n_r0 for _ in range(n_r0)], shape=(n_r0, n_r0))
    pattern: dict[tuple[str, str], CycMatrix] = {
        ("NS+", "NS+"): block_a, ("NS+", "NS-"): block_a, ("NS+", "R+"): block_b,
        ("NS+", "R-"): block_b, ("NS+", "R0"): block_d,
        ("NS-", "NS+"): block_a, ("NS-", "NS-"): block_a, ("NS-", "R+"): -block_b,
        ("NS-", "R-"): -block_b, ("NS-", "R0"): -block_d,
        ("R+", "NS+"): bt, ("R+", "NS-"): -bt, ("R+", "R+"): block_c,
        ("R+", "R-"): -block_c, ("R+", "R0"): zero_rp_r0,
        ("R-", "NS+"): bt, ("R-", "NS-"): -bt, ("R-", "R+"): -block_c,
        ("R-", "R-"): block_c, ("R-", "R0"): zero_rp_r0,
        ("R0", "NS+"): dt, ("R0", "NS-"): -dt, ("R0", "R+"): zero_r0_rp,
        ("R0", "R-"): zero_r0_rp, ("R0", "R0"): zero_r0_r0,
    }
    witness = None
    for (g1, g2), expect in pattern.items():
        got = sub(g1, g2)
        if got != expect:
            witness = (g1, g2)
            break
    checks["block_pattern"] = CheckResult(witness is None, witness)

    # (4) A and C are symmetric and nonsingular
    witness = None
    for name, blk in (("A", block_a), ("C", block_c)):
        if not blk.is_symmetric():
            witness = (name, "not symmetric")
            break
        rank, det = blk.rank_det()
        if det is None or det.is_zero:
            witness = (name, "singular")
            break
    checks["diagonal_blocks"] = CheckResult(witness is None, witness)

    # (5) [B D] has full row rank |NS+|
    bd = block_b.hstack(block_d)
    rank, _ = bd.rank_det()
    ok = rank == len(cls.ns_plus)
    checks["bd_rank"] = CheckResult(ok, None if ok else ("rank", rank, "expected", len(cls.ns_plus)))

    # (6) B^T D = 0
    prod = bt @ block_d
    witness = None
    for i in range(prod.rows):
        for j in range(prod.cols):
            if not prod[i, j].is_zero:
                witness = (cls.r_plus[i], cls.r_zero[j])
                break
        if witness:
            break
    checks["btd_zero"] = CheckResult(witness is None, witness)

    # (7) |R+| + |R0| = |NS+|
    lhs_count = len(cls.r_plus) + len(cls.r_zero)
    ok = lhs_count == len(cls.ns_plus)
    checks["count_identity"] = CheckResult(
        ok, None if ok else (lhs_count, len(cls.ns_plus))
    )

    return BlockReport(
        block_a=block_a, block_b=block_b, block_c=block_c, block_d=block_d, checks=checks
    )
