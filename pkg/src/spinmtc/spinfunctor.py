"""State-space dimensions of spin surfaces from fermionic fusion data.

A sphere with framed punctures labelled X_1..X_n carries one vector space per
assignment of a sign epsilon_i to each puncture; flipping epsilon_i replaces
X_i by its image under tensoring with the odd generator.  The functor's total
space is the sum over all 2^n assignments and splits into 2^{n-1} isomorphic
blocks; punctures with non-split (R0) labels contribute odd generators to a
Clifford algebra acting on the result.  Torus spaces are counted per spin
structure from the label partition alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .clifford import CliffordAlgebraClass, classify_labels, clifford_structure
from .fusion import FormatError, FusionData, InconsistentDataError, hom_unit_dim

__all__ = [
    "SpinSphereSpec",
    "SpinSphereReport",
    "SpinTorusReport",
    "sphere_epsilon_table",
    "sphere_report",
    "torus_dims",
]


@dataclass(frozen=True)
class SpinSphereSpec:
    """A labelled spin sphere: category, odd generator, ordered puncture labels."""

    category: FusionData
    vminus: str
    boundary_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.boundary_labels:
            raise FormatError("a sphere report needs at least one puncture")
        for lab in self.boundary_labels:
            if lab not in self.category.labels:
                raise FormatError(f"unknown puncture label {lab!r}")


@dataclass(frozen=True)
class SpinSphereReport:
    total_dim: int
    component_dim: int
    lambda_rank: int
    lambda_class: CliffordAlgebraClass
    epsilon_table: Mapping[tuple[int, ...], int]

    def to_dict(self) -> dict:
        return {
            "total_dim": self.total_dim,
            "component_dim": self.component_dim,
            "lambda_rank": self.lambda_rank,
            "lambda_class": self.lambda_class.to_dict(),
            "epsilon_table": {
                "".join(str(b) for b in key): val
                for key, val in sorted(self.epsilon_table.items())
            },
        }


@dataclass(frozen=True)
class SpinTorusReport:
    dims: Mapping[str, int]

    def to_dict(self) -> dict:
        return {"dims": {k: self.dims[k] for k in ("AA", "AP", "PA", "PP")}}


def _require_clifford(data: FusionData, vminus: str):
    st = clifford_structure(data, vminus)
    if not st.is_clifford:
        raise InconsistentDataError(
            "square-root type structure (sigma_vv = +1): spin surface spaces are not defined"
        )
    return st


def sphere_epsilon_table(spec: SpinSphereSpec) -> dict[tuple[int, ...], int]:
    """Unit multiplicity of the twisted label chain for every sign assignment.

    Key (e_1..e_n): label i is replaced by its involution image when e_i = 1.
    """
    data = spec.category
    st = _require_clifford(data, spec.vminus)
    n = len(spec.boundary_labels)
    table: dict[tuple[int, ...], int] = {}
    for mask in range(2 ** n):
        eps = tuple((mask >> i) & 1 for i in range(n))
        chain = [
            st.involution[lab] if e else lab
            for lab, e in zip(spec.boundary_labels, eps)
        ]
        table[eps] = hom_unit_dim(data, chain)
    return table


def sphere_report(spec: SpinSphereSpec) -> SpinSphereReport:
    """Total and per-block dimensions, plus the Clifford class of the R0 punctures.

    The total must split evenly into 2^{n-1} blocks; fermionic data
    guarantees it, so anything else is reported as inconsistent input.
    """
    data = spec.category
    cls = classify_labels(data, spec.vminus)
    table = sphere_epsilon_table(spec)
    n = len(spec.boundary_labels)
    total = sum(table.values())
    blocks = 2 ** (n - 1)
    if total % blocks:
        raise InconsistentDataError(
            f"total dimension {total} does not split into {blocks} equal blocks"
        )
    lam = sum(1 for lab in spec.boundary_labels if lab in cls.r_zero)
    return SpinSphereReport(
        total_dim=total,
        component_dim=total // blocks,
        lambda_rank=lam,
        lambda_class=CliffordAlgebraClass(lam),
        epsilon_table=table,
    )


def torus_dims(data: FusionData, vminus: str) -> SpinTorusReport:
    """State-space dimensions of the four spin tori, by boundary condition pair.

    AA is the count of even vacua |NS+|; the three others count Ramond data:
    PP = |R+| and both mixed structures = |R+| + |R0|.
    """
    _require_clifford(data, vminus)
    cls = classify_labels(data, vminus)
    r_plus = len(cls.r_plus)
    r_zero = len(cls.r_zero)
    return SpinTorusReport(
        dims={
            "AA": len(cls.ns_plus),
            "AP": r_plus + r_zero,
            "PA": r_plus + r_zero,
            "PP": r_plus,
        }
    )
