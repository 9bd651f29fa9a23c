"""Odd-generator detection, NS/R classification, and s-matrix block checks."""

from __future__ import annotations

import itertools
from dataclasses import replace
from fractions import Fraction

import pytest

from spinmtc.catalog import BUILTIN_KEYS, builtin
from spinmtc.clifford import (
    CHECK_NAMES,
    CliffordAlgebraClass,
    classify_labels,
    clifford_structure,
    compute_zeta,
    find_vminus,
    involution_from_vminus,
    morita_parity,
    verify_block_structure,
)
from spinmtc.fusion import InconsistentDataError, compute_smatrix, deligne_product

CLIFFORD_BUILTINS = ("fermion", "dirac", "toric")


# --- odd generator detection --------------------------------------------------


def test_find_vminus_on_builtins():
    assert find_vminus(builtin("trivial")) == []
    assert find_vminus(builtin("fermion")) == ["psi"]
    assert find_vminus(builtin("dirac")) == ["j2"]
    assert find_vminus(builtin("toric")) == ["f"]
    assert find_vminus(builtin("fibonacci")) == []


def test_find_vminus_on_products():
    ff = deligne_product(builtin("fermion"), builtin("fermion"))
    assert find_vminus(ff) == ["(1,psi)", "(psi,1)"]
    fd = deligne_product(builtin("fermion"), builtin("dirac"))
    assert find_vminus(fd) == ["(1,j2)", "(psi,j0)"]
    ft = deligne_product(builtin("fermion"), builtin("toric"))
    assert find_vminus(ft) == ["(1,f)", "(psi,1)", "(psi,e)", "(psi,m)"]


def test_clifford_structure_rejects_non_candidates():
    with pytest.raises(InconsistentDataError):
        clifford_structure(builtin("fermion"), "sigma")
    with pytest.raises(InconsistentDataError):
        clifford_structure(builtin("fibonacci"), "tau")


# --- involution and zeta --------------------------------------------------------


def test_involution_is_multiplication_by_vminus():
    d = builtin("dirac")
    inv = involution_from_vminus(d, "j2")
    assert inv == {"j0": "j2", "j1": "j3", "j2": "j0", "j3": "j1"}
    t = builtin("toric")
    assert involution_from_vminus(t, "f") == {"1": "f", "e": "m", "m": "e", "f": "1"}


def test_zeta_values_on_builtins():
    assert compute_zeta(builtin("fermion"), "psi") == {"1": 1, "psi": 1, "sigma": -1}
    assert compute_zeta(builtin("dirac"), "j2") == {"j0": 1, "j1": -1, "j2": 1, "j3": -1}
    assert compute_zeta(builtin("toric"), "f") == {"1": 1, "e": -1, "m": -1, "f": 1}


def test_zeta_multiplicative_on_builtins():
    for key in CLIFFORD_BUILTINS:
        data = builtin(key)
        (vminus,) = find_vminus(data)
        zeta = compute_zeta(data, vminus)
        assert set(zeta.values()) <= {1, -1}
        for (i, j, k), v in data.fusion.items():
            if v:
                assert zeta[k] == zeta[i] * zeta[j]


def test_zeta_rejects_non_sign_twist_ratio():
    d = builtin("dirac")
    corrupted = replace(d, twist={**d.twist, "j1": Fraction(1, 4)})
    with pytest.raises(InconsistentDataError, match="not a sign"):
        classify_labels(corrupted, "j2")


def test_zeta_multiplicativity_failure_is_detected():
    dd = deligne_product(builtin("dirac"), builtin("dirac"))
    corrupted = replace(
        dd, twist={**dd.twist, "(j1,j1)": dd.twist["(j1,j1)"] + Fraction(1, 2)}
    )
    with pytest.raises(InconsistentDataError, match="not multiplicative"):
        classify_labels(corrupted, "(j0,j2)")


def test_declared_square_root_case_is_reported_not_classified():
    sqrt = replace(builtin("fermion"), sigma_vv=1)
    st = clifford_structure(sqrt, "psi")
    assert st.sigma_vv == 1
    assert not st.is_clifford
    with pytest.raises(InconsistentDataError, match="self-braiding"):
        classify_labels(sqrt, "psi")


# --- classification ---------------------------------------------------------------


def test_fermion_classification_frozen():
    cls = classify_labels(builtin("fermion"), "psi")
    assert cls.ns_plus == ("1",)
    assert cls.ns_minus == ("psi",)
    assert cls.r_plus == ()
    assert cls.r_minus == ()
    assert cls.r_zero == ("sigma",)


def test_dirac_and_toric_classification_frozen():
    cls = classify_labels(builtin("dirac"), "j2")
    assert cls.to_dict() == {
        "ns_plus": ["j0"],
        "ns_minus": ["j2"],
        "r_plus": ["j1"],
        "r_minus": ["j3"],
        "r_zero": [],
    }
    cls = classify_labels(builtin("toric"), "f")
    assert cls.to_dict() == {
        "ns_plus": ["1"],
        "ns_minus": ["f"],
        "r_plus": ["e"],
        "r_minus": ["m"],
        "r_zero": [],
    }


def test_minus_lists_are_involution_images_of_plus_lists():
    cases = [(builtin(k), find_vminus(builtin(k))[0]) for k in CLIFFORD_BUILTINS]
    ff = deligne_product(builtin("fermion"), builtin("fermion"))
    cases += [(ff, vm) for vm in find_vminus(ff)]
    for data, vminus in cases:
        inv = involution_from_vminus(data, vminus)
        cls = classify_labels(data, vminus)
        assert tuple(inv[x] for x in cls.ns_plus) == cls.ns_minus
        assert tuple(inv[x] for x in cls.r_plus) == cls.r_minus
        for lab in cls.r_zero:
            assert inv[lab] == lab
        all_labels = cls.ns_plus + cls.ns_minus + cls.r_plus + cls.r_minus + cls.r_zero
        assert sorted(all_labels) == sorted(data.labels)


def test_count_identity_on_all_builtin_classifications():
    for key in CLIFFORD_BUILTINS:
        data = builtin(key)
        for vminus in find_vminus(data):
            cls = classify_labels(data, vminus)
            assert len(cls.r_plus) + len(cls.r_zero) == len(cls.ns_plus), key


# --- block structure ------------------------------------------------------------


def test_block_checks_pass_on_builtins():
    for key in CLIFFORD_BUILTINS:
        data = builtin(key)
        (vminus,) = find_vminus(data)
        cls = classify_labels(data, vminus)
        report = verify_block_structure(data, cls, compute_smatrix(data))
        assert tuple(report.checks) == CHECK_NAMES
        assert report.all_pass, (key, [n for n, r in report.checks.items() if not r.ok])


def test_block_checks_pass_on_products_with_every_vminus():
    pairs = [("fermion", "fermion"), ("fermion", "dirac"), ("fermion", "toric")]
    for a, b in pairs:
        prod = deligne_product(builtin(a), builtin(b))
        s = compute_smatrix(prod)
        candidates = find_vminus(prod)
        assert candidates
        for vminus in candidates:
            cls = classify_labels(prod, vminus)
            report = verify_block_structure(prod, cls, s)
            assert report.all_pass, (a, b, vminus)


def test_product_classification_sizes_frozen():
    fd = deligne_product(builtin("fermion"), builtin("dirac"))
    sizes = {}
    for vminus in find_vminus(fd):
        cls = classify_labels(fd, vminus)
        sizes[vminus] = (
            len(cls.ns_plus),
            len(cls.r_plus),
            len(cls.r_zero),
        )
    assert sizes == {"(1,j2)": (3, 3, 0), "(psi,j0)": (4, 0, 4)}


def test_block_shapes_follow_the_classification():
    data = builtin("fermion")
    cls = classify_labels(data, "psi")
    report = verify_block_structure(data, cls, compute_smatrix(data))
    np_, rp, rz = len(cls.ns_plus), len(cls.r_plus), len(cls.r_zero)
    assert (report.block_a.rows, report.block_a.cols) == (np_, np_)
    assert (report.block_b.rows, report.block_b.cols) == (np_, rp)
    assert (report.block_c.rows, report.block_c.cols) == (rp, rp)
    assert (report.block_d.rows, report.block_d.cols) == (np_, rz)


def test_corrupted_twist_breaks_block_checks_not_the_code():
    # Shifting one dirac twist by half turns every label NS; the partition is
    # still computable but the counting checks must fail.
    d = builtin("dirac")
    corrupted = replace(d, twist={**d.twist, "j3": Fraction(5, 8)})
    cls = classify_labels(corrupted, "j2")
    assert cls.to_dict() == {
        "ns_plus": ["j0", "j1"],
        "ns_minus": ["j2", "j3"],
        "r_plus": [],
        "r_minus": [],
        "r_zero": [],
    }
    report = verify_block_structure(corrupted, cls, compute_smatrix(corrupted))
    failing = [name for name, r in report.checks.items() if not r.ok]
    assert failing == ["bd_rank", "count_identity"]
    assert not report.all_pass
    assert report.checks["count_identity"].witness is not None


# --- Clifford algebra bookkeeping ------------------------------------------------


def test_clifford_algebra_class_and_parity():
    assert CliffordAlgebraClass(0).parity == 0
    assert CliffordAlgebraClass(3).parity == 1
    combined = morita_parity([CliffordAlgebraClass(3), CliffordAlgebraClass(2)])
    assert combined.generators == 5
    assert combined.parity == 1


def test_morita_parity_is_a_monoid_homomorphism():
    for xs, ys in itertools.product(
        [[], [CliffordAlgebraClass(1)], [CliffordAlgebraClass(2), CliffordAlgebraClass(3)]],
        repeat=2,
    ):
        whole = morita_parity(xs + ys)
        left, right = morita_parity(xs), morita_parity(ys)
        assert whole.parity == (left.parity + right.parity) % 2
        assert whole.generators == left.generators + right.generators
