"""Fusion-ring data for modular tensor categories.

A :class:`FusionData` bundle carries the numerical shadow this library works
with: an ordered label set, fusion multiplicities, rational twist rotation
numbers, and cyclotomic quantum dimensions.  This module validates the axioms,
computes the s-matrix from twists and fusion, folds iterated fusion products,
and forms Deligne (componentwise) products.  Everything is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .exactnum import (
    Cyclotomic,
    CycMatrix,
    parse_fraction,
    root_of_unity,
    _fraction_str,
)

__all__ = [
    "FusionData",
    "SMatrix",
    "Violation",
    "FormatError",
    "InconsistentDataError",
    "validate",
    "compute_smatrix",
    "check_s_squared",
    "hom_unit_dim",
    "deligne_product",
    "fusion_from_dict",
    "fusion_to_dict",
    "load_fusion",
    "dump_fusion",
]


class FormatError(ValueError):
    """Malformed input: bad JSON shape, unknown keys, unparseable numbers."""


class InconsistentDataError(ValueError):
    """Well-formed input whose numbers contradict the structure they claim."""


@dataclass(frozen=True)
class Violation:
    """One failed validation check, with a witness locating the failure."""

    check: str
    witness: tuple
    detail: str

    def to_dict(self) -> dict:
        return {"check": self.check, "witness": list(self.witness), "detail": self.detail}


@dataclass(frozen=True)
class FusionData:
    """Numerical shadow of a modular tensor category.

    ``fusion`` is sparse: absent triples mean multiplicity zero.  ``sigma_vv``
    is the self-braiding sign of the distinguished square root of the unit,
    when the input declares one (-1 is the Clifford case).
    """

    name: str
    labels: tuple[str, ...]
    unit: str
    dual: Mapping[str, str]
    fusion: Mapping[tuple[str, str, str], int]
    twist: Mapping[str, Fraction]
    qdim: Mapping[str, Cyclotomic]
    sigma_vv: int | None = None

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise FormatError(f"unknown label {label!r} in category {self.name!r}") from None

    def n(self, i: str, j: str, k: str) -> int:
        return self.fusion.get((i, j, k), 0)

    @cached_property
    def rank(self) -> int:
        return len(self.labels)

    @cached_property
    def _tensor(self) -> np.ndarray:
        """Multiplicities as an int64 array indexed by label positions."""
        n = self.rank
        t = np.zeros((n, n, n), dtype=np.int64)
        idx = self._index
        for (i, j, k), v in self.fusion.items():
            if i in idx and j in idx and k in idx:
                t[idx[i], idx[j], idx[k]] = v
        return t

    def fusion_matrix(self, label: str) -> np.ndarray:
        """Matrix of left fusion by ``label``: rows j, cols k."""
        return self._tensor[self.index(label)]

    def theta(self, label: str) -> Cyclotomic:
        return root_of_unity(self.twist[label])


# ---------------------------------------------------------------------------
# validation


def validate(data: FusionData) -> list[Violation]:
    """All axiom violations, with witnesses; empty list means valid.

    Structural problems (unknown labels, missing maps) short-circuit the
    numeric checks, which would not be well-posed without them.
    """
    out: list[Violation] = []
    labels = data.labels
    label_set = set(labels)

    if not labels:
        return [Violation("labels", (), "label set is empty")]
    for lab in labels:
        if not isinstance(lab, str) or not lab or any(ch.isspace() for ch in lab):
            out.append(Violation("labels", (lab,), "labels must be nonempty strings without whitespace"))
    if len(label_set) != len(labels):
        dup = sorted({lab for lab in labels if labels.count(lab) > 1})
        out.append(Violation("labels", tuple(dup), "duplicate labels"))
    if data.unit not in label_set:
        out.append(Violation("unit", (data.unit,), "unit label not in label set"))

    for mapping, name in ((data.dual, "dual"), (data.twist, "twist"), (data.qdim, "qdim")):
        missing = label_set - set(mapping)
        extra = set(mapping) - label_set
        if missing:
            out.append(Violation(name, tuple(sorted(missing)), f"{name} missing for these labels"))
        if extra:
            out.append(Violation(name, tuple(sorted(extra)), f"{name} defined for unknown labels"))

    for key, v in data.fusion.items():
        if len(key) != 3 or any(lab not in label_set for lab in key):
            out.append(Violation("fusion", key, "fusion key mentions unknown labels"))
        elif not isinstance(v, int) or v < 0:
            out.append(Violation("fusion", key, f"multiplicity must be a nonnegative integer, got {v!r}"))

    if data.sigma_vv not in (None, 1, -1):
        out.append(Violation("sigma_vv", (data.sigma_vv,), "sigma_vv must be +1 or -1"))

    if out:
        return out

    # dual is an involution
    for lab in labels:
        img = data.dual[lab]
        if data.dual[img] != lab:
            out.append(Violation("dual", (lab,), f"dual is not an involution at {lab}"))
    if data.dual[data.unit] != data.unit:
        out.append(Violation("dual", (data.unit,), "unit must be self-dual"))
    if out:
        return out

    t = data._tensor
    n = data.rank
    iu = data.index(data.unit)

    # unit constraint: fusing with the unit is the identity permutation
    eye = np.eye(n, dtype=np.int64)
    if not np.array_equal(t[iu], eye):
        j, k = map(int, np.argwhere(t[iu] != eye)[0])
        out.append(Violation("unit_axiom", (labels[j], labels[k]),
                             f"N(unit,{labels[j]} -> {labels[k]}) != delta"))
    if not np.array_equal(t[:, iu, :], eye):
        i, k = map(int, np.argwhere(t[:, iu, :] != eye)[0])
        out.append(Violation("unit_axiom", (labels[i], labels[k]),
                             f"N({labels[i]},unit -> {labels[k]}) != delta"))

    # duality: multiplicity of the unit in i x j is delta_{j, dual(i)}
    dual_perm = np.array([data.index(data.dual[lab]) for lab in labels])
    duality = np.zeros((n, n), dtype=np.int64)
    duality[np.arange(n), dual_perm] = 1
    if not np.array_equal(t[:, :, iu], duality):
        i, j = map(int, np.argwhere(t[:, :, iu] != duality)[0])
        out.append(Violation("duality", (labels[i], labels[j]),
                             f"N({labels[i]},{labels[j]} -> unit) != delta(dual)"))

    # commutativity
    if not np.array_equal(t, t.transpose(1, 0, 2)):
        i, j, k = map(int, np.argwhere(t != t.transpose(1, 0, 2))[0])
        out.append(Violation("commutativity", (labels[i], labels[j], labels[k]),
                             "N(i,j -> k) != N(j,i -> k)"))

    # associativity; values are tiny so int64 sums are exact
    lhs = np.einsum("ijm,mkl->ijkl", t, t)
    rhs = np.einsum("jkm,iml->ijkl", t, t)
    if not np.array_equal(lhs, rhs):
        i, j, k, l = map(int, np.argwhere(lhs != rhs)[0])
        out.append(Violation("associativity", (labels[i], labels[j], labels[k], labels[l]),
                             "sum over (i x j) x k differs from i x (j x k)"))

    # quantum dimension is a one-dimensional representation of the ring
    if data.qdim[data.unit] != 1:
        out.append(Violation("qdim", (data.unit,), "quantum dimension of the unit must be 1"))
    for i in labels:
        di = data.qdim[i]
        for j in labels:
            lhs_d = di * data.qdim[j]
            rhs_d = Cyclotomic.from_rational(0)
            for k in labels:
                m = data.n(i, j, k)
                if m:
                    rhs_d = rhs_d + data.qdim[k] * m
            if lhs_d != rhs_d:
                out.append(Violation("dimension_equation", (i, j),
                                     f"d({i})*d({j}) != sum of channel dimensions"))
                break
        else:
            continue
        break

    if data.twist[data.unit] % 1 != 0:
        out.append(Violation("twist", (data.unit,), "twist of the unit must vanish mod 1"))

    return out


# ---------------------------------------------------------------------------
# s-matrix


@dataclass(frozen=True)
class SMatrix:
    """Exact s-matrix of a category, tagged with its source name."""

    data: CycMatrix
    source: str


def compute_smatrix(data: FusionData) -> SMatrix:
    """s_{ij} = theta_i^{-1} theta_j^{-1} sum_k N(i,j->k) theta_k d_k.

    Raises InconsistentDataError if the result is not symmetric.
    """
    labels = data.labels
    theta = {lab: data.theta(lab) for lab in labels}
    theta_inv = {lab: root_of_unity(-data.twist[lab]) for lab in labels}
    weight = {lab: theta[lab] * data.qdim[lab] for lab in labels}

    channels: dict[tuple[str, str], list[tuple[str, int]]] = {}
    for (i, j, k), v in data.fusion.items():
        if v:
            channels.setdefault((i, j), []).append((k, v))

    zero = Cyclotomic.from_rational(0)
    rows = []
    for i in labels:
        row = []
        for j in labels:
            acc = zero
            for k, v in channels.get((i, j), ()):
                acc = acc + weight[k] * v
            row.append(theta_inv[i] * theta_inv[j] * acc)
        rows.append(row)
    mat = CycMatrix(rows)
    if not mat.is_symmetric():
        bad = next(
            (labels[i], labels[j])
            for i in range(len(labels))
            for j in range(len(labels))
            if mat[i, j] != mat[j, i]
        )
        raise InconsistentDataError(f"s-matrix is not symmetric at {bad} for {data.name!r}")
    return SMatrix(data=mat, source=data.name)


def check_s_squared(s: SMatrix, data: FusionData) -> tuple[bool, Cyclotomic | None]:
    """Whether s^2 is a scalar multiple of the charge conjugation permutation.

    Returns (True, scalar) on success and (False, None) otherwise.
    """
    square = s.data @ s.data
    labels = data.labels
    iu = data.index(data.unit)
    alpha = square[iu, iu]  # unit is self-dual, so this is the would-be scalar
    zero = Cyclotomic.from_rational(0)
    for a, i in enumerate(labels):
        for b, j in enumerate(labels):
            want = alpha if data.dual[i] == j else zero
            if square[a, b] != want:
                return False, None
    if alpha.is_zero:
        return False, None
    return True, alpha


# ---------------------------------------------------------------------------
# iterated fusion


def hom_unit_dim(data: FusionData, chain: Sequence[str]) -> int:
    """Multiplicity of the unit in the ordered fusion product of ``chain``.

    The empty chain is the unit object itself, so the answer is 1.
    """
    n = data.rank
    iu = data.index(data.unit)
    vec = np.zeros(n, dtype=object)  # python ints: no overflow anywhere
    vec[iu] = 1
    for lab in chain:
        vec = vec @ data.fusion_matrix(lab)
    return int(vec[iu])


def deligne_product(a: FusionData, b: FusionData) -> FusionData:
    """Componentwise product category: labels pair up, twists add, dims multiply."""
    labels = tuple(f"({la},{lb})" for la in a.labels for lb in b.labels)
    pair = {(la, lb): f"({la},{lb})" for la in a.labels for lb in b.labels}
    fusion: dict[tuple[str, str, str], int] = {}
    for (i1, j1, k1), v1 in a.fusion.items():
        if not v1:
            continue
        for (i2, j2, k2), v2 in b.fusion.items():
            if v2:
                fusion[(pair[(i1, i2)], pair[(j1, j2)], pair[(k1, k2)])] = v1 * v2
    return FusionData(
        name=f"{a.name}*{b.name}",
        labels=labels,
        unit=pair[(a.unit, b.unit)],
        dual={pair[(la, lb)]: pair[(a.dual[la], b.dual[lb])] for la in a.labels for lb in b.labels},
        fusion=fusion,
        twist={pair[(la, lb)]: (a.twist[la] + b.twist[lb]) % 1 for la in a.labels for lb in b.labels},
        qdim={pair[(la, lb)]: a.qdim[la] * b.qdim[lb] for la in a.labels for lb in b.labels},
        sigma_vv=None,
    )


# ---------------------------------------------------------------------------
# JSON interchange

_ALLOWED_KEYS = {"name", "labels", "unit", "dual", "fusion", "twist", "qdim", "sigma_vv"}
_REQUIRED_KEYS = {"name", "labels", "unit", "dual", "fusion", "twist", "qdim"}


def fusion_from_dict(obj: object) -> FusionData:
    """Strict reader for the category file format; unknown keys are errors."""
    if not isinstance(obj, dict):
        raise FormatError("category file must contain a JSON object")
    unknown = set(obj) - _ALLOWED_KEYS
    if unknown:
        raise FormatError(f"unknown keys in category file: {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(obj)
    if missing:
        raise FormatError(f"missing keys in category file: {sorted(missing)}")

    name = obj["name"]
    labels = obj["labels"]
    unit = obj["unit"]
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise FormatError("labels must be a list of strings")
    if not isinstance(unit, str):
        raise FormatError("unit must be a string")

    dual = obj["dual"]
    if not isinstance(dual, dict) or not all(isinstance(v, str) for v in dual.values()):
        raise FormatError("dual must map labels to labels")

    fus_raw = obj["fusion"]
    if not isinstance(fus_raw, list):
        raise FormatError("fusion must be a list of [i, j, k, n] entries")
    fusion: dict[tuple[str, str, str], int] = {}
    for item in fus_raw:
        if (
            not isinstance(item, list)
            or len(item) != 4
            or not all(isinstance(x, str) for x in item[:3])
            or not isinstance(item[3], int)
        ):
            raise FormatError(f"malformed fusion entry: {item!r}")
        i, j, k, v = item
        if v < 0:
            raise FormatError(f"fusion multiplicity must be nonnegative: {item!r}")
        key = (i, j, k)
        if key in fusion:
            raise FormatError(f"duplicate fusion entry for {key}")
        if v:
            fusion[key] = v

    twist_raw = obj["twist"]
    if not isinstance(twist_raw, dict):
        raise FormatError("twist must map labels to rationals")
    try:
        twist = {lab: parse_fraction(v) for lab, v in twist_raw.items()}
    except ValueError as exc:
        raise FormatError(str(exc)) from exc

    qdim_raw = obj["qdim"]
    if not isinstance(qdim_raw, dict):
        raise FormatError("qdim must map labels to cyclotomic values")
    qdim: dict[str, Cyclotomic] = {}
    for lab, v in qdim_raw.items():
        if isinstance(v, dict):
            try:
                qdim[lab] = Cyclotomic.from_dict(v)
            except ValueError as exc:
                raise FormatError(str(exc)) from exc
        else:
            try:
                qdim[lab] = Cyclotomic.from_rational(parse_fraction(v))
            except ValueError as exc:
                raise FormatError(f"malformed qdim for {lab!r}: {v!r}") from exc

    sigma_vv = obj.get("sigma_vv")
    if sigma_vv is not None and sigma_vv not in (1, -1):
        raise FormatError(f"sigma_vv must be 1 or -1, got {sigma_vv!r}")

    return FusionData(
        name=name,
        labels=tuple(labels),
        unit=unit,
        dual=dual,
        fusion=fusion,
        twist=twist,
        qdim=qdim,
        sigma_vv=sigma_vv,
    )


def fusion_to_dict(data: FusionData) -> dict:
    """Canonical (deterministically ordered) dict form of a category."""
    order = {lab: i for i, lab in enumerate(data.labels)}
    fus = sorted(
        ((i, j, k, v) for (i, j, k), v in data.fusion.items() if v),
        key=lambda item: (order[item[0]], order[item[1]], order[item[2]]),
    )
    out: dict = {
        "name": data.name,
        "labels": list(data.labels),
        "unit": data.unit,
        "dual": {lab: data.dual[lab] for lab in data.labels},
        "fusion": [list(item) for item in fus],
        "twist": {lab: _fraction_str(data.twist[lab]) for lab in data.labels},
        "qdim": {lab: data.qdim[lab].to_dict() for lab in data.labels},
    }
    if data.sigma_vv is not None:
        out["sigma_vv"] = data.sigma_vv
    return out


def load_fusion(path: str | Path) -> FusionData:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from exc
    return fusion_from_dict(obj)


def dump_fusion(data: FusionData) -> str:
    return json.dumps(fusion_to_dict(data), indent=2) + "\n"
