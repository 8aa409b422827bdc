import json
from fractions import Fraction as F

import pytest

from innercoh.dirichlet import enumerate_characters, nth_roots, principal_character
from innercoh.intervals import degree_profile
from innercoh.lie_cohomology import betti, generator_degrees
from innercoh.spectral import (
    DomainError,
    VerdictKind,
    classify,
    duality_pairing_check,
    residual_fiber,
    residual_spectrum,
    standard_parabolic_shapes,
    xi0_shapes,
)
from innercoh.weights import from_standard

from oracles import divisor_count, phi


def zero(n):
    return from_standard(n, [0] * n)


def test_shapes_small():
    assert [s.parts for s in standard_parabolic_shapes(2)] == [(1, 1)]
    assert sorted(s.parts for s in standard_parabolic_shapes(3)) == [(1, 1, 1), (1, 2), (2, 1)]
    assert len(standard_parabolic_shapes(4)) == 7
    assert len(standard_parabolic_shapes(4, proper=False)) == 8


@pytest.mark.parametrize("n", range(2, 12))
def test_shape_count(n):
    shapes = standard_parabolic_shapes(n)
    assert len(shapes) == 2 ** (n - 1) - 1
    assert all(s.n == n and s.proper for s in shapes)


def test_xi0_examples():
    assert [s.parts for s in xi0_shapes(5)] == [(1, 1, 1, 1, 1)]
    assert sorted(s.parts for s in xi0_shapes(4)) == [(1, 1, 1, 1), (2, 2)]
    assert sorted(s.parts for s in xi0_shapes(6)) == [(1,) * 6, (2, 2, 2), (3, 3)]


def test_residual_trivial_level():
    (desc,) = residual_spectrum(5, zero(5), 1)
    assert desc.finite_part.is_principal
    assert desc.type_exponent == 0
    assert desc.multiplicity == 1


def test_residual_level_7():
    descs = residual_spectrum(5, zero(5), 7)
    assert len(descs) == 6
    assert sum(len(nth_roots(w, 5)) for w in enumerate_characters(7)) == 6


def test_residual_fiber_n3():
    fiber = residual_fiber(3, zero(3), 7, principal_character(7))
    assert len(fiber) == 3


def test_type_exponent():
    w = from_standard(5, [2] * 5)
    assert all(d.type_exponent == 2 for d in residual_spectrum(5, w, 4))
    w = from_standard(3, [F(2, 1)] * 3)
    assert residual_spectrum(3, w, 1)[0].type_exponent == 2


@pytest.mark.parametrize("N", [1, 4, 5, 7, 8, 9, 12, 15, 16, 21])
@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_residual_partition(n, N):
    descs = residual_spectrum(n, zero(n), N)
    assert len(descs) == phi(N)
    assert len({d.finite_part for d in descs}) == phi(N)
    assert all(d.multiplicity == 1 for d in descs)


@pytest.mark.parametrize(
    "n,b", [(4, [0] * 4), (3, [1, 0, 0]), (3, [1, 1, 1]), (3, [F(1, 2)] * 3)]
)
def test_residual_regime(n, b):
    with pytest.raises(DomainError):
        residual_spectrum(n, from_standard(n, b), 1)


def test_classify_n3_zero():
    r = classify(3, zero(3), 1)
    assert r.dim_sym == 5
    assert all(v.kind is VerdictKind.ZERO for v in r.per_degree)


def test_classify_n5_zero():
    r = classify(5, zero(5), 1)
    assert r.nonvanishing_degrees() == [5, 9]
    assert r.verdict(5).bound == r.verdict(9).bound == 1
    assert all(r.verdict(k).kind is VerdictKind.ZERO for k in range(15) if k not in (5, 9))
    assert "ker(r^k" in r.verdict(5).symbolic


def test_classify_n2_odd():
    r = classify(2, from_standard(2, [1, 0]), 1)
    assert all(v.kind is VerdictKind.SHEAF_ZERO for v in r.per_degree)


def test_classify_nonconstant():
    r = classify(5, from_standard(5, [2, 1, 1, 0, 0]), 3)
    assert all(v.kind is VerdictKind.NONCONSTANT_ZERO for v in r.per_degree)


@pytest.mark.parametrize(
    "n,b", [(4, [0] * 4), (3, [0, 1, 0]), (3, [F(1, 3)] * 3)]
)
def test_classify_rejects(n, b):
    with pytest.raises(DomainError):
        classify(n, from_standard(n, b), 1)


@pytest.mark.parametrize("n", [5, 7, 11, 13])
@pytest.mark.parametrize("N", [1, 8, 9])
def test_bound_is_betti_times_finite_parts(n, N):
    r = classify(n, zero(n), N)
    s0 = generator_degrees(n)
    for k, v in enumerate(r.per_degree):
        if k in s0:
            assert v.bound == betti(n, k) * phi(N)
        else:
            assert v.kind is VerdictKind.ZERO


@pytest.mark.parametrize("n", [5, 7])
def test_overlap_degree_is_the_only_cusp_window_hit(n):
    r = classify(n, zero(n), 1)
    cusp = degree_profile(n).I_cusp
    assert [k for k in r.nonvanishing_degrees() if k in cusp] == [2 * n - 1]


@pytest.mark.parametrize("n", [2, 3, 5, 7, 11, 13])
def test_duality_check(n):
    assert duality_pairing_check(n)


def test_report_serialization_is_deterministic():
    a = classify(7, from_standard(7, [2] * 7), 12).to_json()
    b = classify(7, from_standard(7, [2] * 7), 12).to_json()
    assert a == b
    data = json.loads(a)
    assert list(data) == ["n", "weight", "level", "verdicts"]
    assert data["verdicts"][5] == {
        "k": 5, "verdict": "ResidualKernel", "bound": 4, "symbolic": "ker(r^k | Φ_BG(Res_f(λ)))"}
    assert data["verdicts"][0] == {"k": 0, "verdict": "Zero"}


def test_markdown_escapes_pipes():
    md = classify(5, zero(5), 1).to_markdown()
    row = [line for line in md.splitlines() if line.startswith("| 5 |")][0]
    assert row.count(" | ") == 3


@pytest.mark.parametrize("n", range(2, 31))
def test_xi0_collapse(n):
    assert len(xi0_shapes(n)) == divisor_count(n) - 1


@pytest.mark.parametrize("n", range(2, 15))
def test_xi0_matches_composition_filter(n):
    filtered = [s for s in standard_parabolic_shapes(n) if s.equal_parts]
    assert sorted(s.parts for s in xi0_shapes(n)) == sorted(s.parts for s in filtered)
