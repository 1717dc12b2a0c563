"""Tests for entanglement measures, bounds, and mixedness reports."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entsum.measures import (
    GlobalMeasureEvaluator,
    MeasureKind,
    global_measure,
    linear_entropy,
    marginal_mixedness_report,
    meyer_wallach_q,
    negativity,
    negativity_oracle,
    renyi_inf_entropy,
    scott_q_m,
    upper_bound,
    von_neumann_entropy,
)
from entsum.partitions import Bipartition, enumerate_bipartitions
from entsum.states import catalog_state, haar_random_state


def test_kind_parsing():
    assert MeasureKind.parse("vn") is MeasureKind.VON_NEUMANN
    assert MeasureKind.parse("LINEAR") is MeasureKind.LINEAR
    assert MeasureKind.parse("renyi") is MeasureKind.RENYI_INF
    assert MeasureKind.parse("neg") is MeasureKind.NEGATIVITY
    with pytest.raises(Exception):
        MeasureKind.parse("entropy")


def test_entropies_on_pure_spectrum():
    spec = np.array([1.0, 0.0])
    assert linear_entropy(spec) == 0.0
    assert von_neumann_entropy(spec) == 0.0
    assert renyi_inf_entropy(spec) == 0.0


def test_entropies_on_uniform_spectrum():
    for m in (1, 2, 3):
        d = 2**m
        spec = np.full(d, 1.0 / d)
        assert np.isclose(linear_entropy(spec), 1 - 2.0**-m, atol=1e-14)
        assert np.isclose(von_neumann_entropy(spec), m, atol=1e-12)
        assert np.isclose(renyi_inf_entropy(spec), m * math.log(2), atol=1e-14)


def test_entropies_on_biased_spectrum():
    # Hand-computed for spectrum (3/4, 1/4).
    spec = np.array([0.75, 0.25])
    assert np.isclose(linear_entropy(spec), 1 - (9 / 16 + 1 / 16), atol=1e-15)
    expected_vn = -(0.75 * math.log2(0.75) + 0.25 * math.log2(0.25))
    assert np.isclose(von_neumann_entropy(spec), expected_vn, atol=1e-14)
    assert np.isclose(renyi_inf_entropy(spec), -math.log(0.75), atol=1e-15)


def test_bell_state_measures():
    s = catalog_state("GHZ2")  # two-qubit GHZ is the Bell state
    b = Bipartition(2, (0,))
    assert np.isclose(negativity(s, b), 0.5, atol=1e-12)
    assert np.isclose(negativity_oracle(s, b), 0.5, atol=1e-12)
    rep = global_measure(s, MeasureKind.VON_NEUMANN)
    assert np.isclose(rep.total, 1.0, atol=1e-12)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=2, max_value=4), st.integers(min_value=0, max_value=2**31))
def test_negativity_dual_route(n, seed):
    s = haar_random_state(n, np.random.default_rng(seed))
    for b in enumerate_bipartitions(n):
        assert abs(negativity(s, b) - negativity_oracle(s, b)) < 1e-9


def test_global_measure_report_shape():
    s = catalog_state("GHZ3")
    rep = global_measure(s, MeasureKind.LINEAR)
    assert len(rep.per_bipartition) == 3
    assert np.isclose(rep.total, sum(v for _, v in rep.per_bipartition), atol=1e-12)
    doc = json.loads(rep.to_json())
    assert doc["kind"] == "linear"
    lines = rep.to_csv().strip().splitlines()
    assert lines[0] == "subset_bitmask,subset_size,value"
    assert len(lines) == 4


def test_evaluator_matches_global_measure():
    # The batched evaluator and the per-bipartition Jacobi path must agree.
    rng = np.random.default_rng(17)
    for n in (2, 3, 4, 5):
        for kind in MeasureKind:
            ev = GlobalMeasureEvaluator(n, kind)
            for _ in range(3):
                s = haar_random_state(n, rng)
                assert abs(ev.value(s.amplitudes) - global_measure(s, kind).total) < 1e-10


def test_product_state_has_zero_measure():
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = 1.0
    from entsum.states import from_amplitudes

    s = from_amplitudes(3, amps)
    for kind in MeasureKind:
        assert abs(global_measure(s, kind).total) < 1e-12


def test_meyer_wallach_values():
    assert np.isclose(meyer_wallach_q(catalog_state("GHZ3")), 1.0, atol=1e-12)
    assert np.isclose(meyer_wallach_q(catalog_state("W3")), 8 / 9, atol=1e-12)


def test_scott_q_m_reduces_to_meyer_wallach():
    rng = np.random.default_rng(23)
    s = haar_random_state(4, rng)
    assert np.isclose(scott_q_m(s, 1), meyer_wallach_q(s), atol=1e-12)


def test_scott_q_m_on_ghz():
    # GHZ marginals of any size have spectrum (1/2, 1/2): purity 1/2.
    for n in (3, 4, 5):
        s = catalog_state(f"GHZ{n}")
        for m in range(1, n // 2 + 1):
            expected = 2**m / (2**m - 1) * (1 - 0.5)
            assert np.isclose(scott_q_m(s, m), expected, atol=1e-12)


def test_upper_bound_closed_form_oracle():
    # Independent recomputation from the definition: each size-m bipartition
    # contributes the maximally-mixed value, halving the count at m = n/2.
    from math import comb

    def v(kind, m):
        return {
            MeasureKind.LINEAR: 1 - 2.0**-m,
            MeasureKind.VON_NEUMANN: float(m),
            MeasureKind.RENYI_INF: m * math.log(2),
            MeasureKind.NEGATIVITY: (2**m - 1) / 2,
        }[kind]

    for n in range(2, 9):
        for kind in MeasureKind:
            total = 0.0
            for m in range(1, n // 2 + 1):
                c = comb(n, m)
                if 2 * m == n:
                    c //= 2
                total += c * v(kind, m)
            assert np.isclose(upper_bound(kind, n), total, atol=1e-12)


def test_bounds_dominate_random_states():
    rng = np.random.default_rng(31)
    for n in (3, 4, 5):
        for kind in MeasureKind:
            bound = upper_bound(kind, n)
            for _ in range(5):
                s = haar_random_state(n, rng)
                assert global_measure(s, kind).total <= bound + 1e-9


def test_mixedness_report_on_ghz4():
    s = catalog_state("GHZ4")
    rows = marginal_mixedness_report(s, 2)
    assert [r.m for r in rows] == [1, 2]
    r1 = rows[0]
    assert r1.subset_count == 4
    assert r1.all_maximally_mixed
    assert r1.max_frobenius_deviation < 1e-12
    # GHZ 2-qubit marginals are not maximally mixed (spectrum 1/2,1/2,0,0).
    r2 = rows[1]
    assert not r2.all_maximally_mixed
    assert np.isclose(r2.linear[0], 0.5, atol=1e-12)
    d = r2.as_dict()
    assert d["m"] == 2 and "von_neumann" in d


def test_mixedness_report_w3():
    # W-state single-qubit marginals: spectrum (2/3, 1/3).
    rows = marginal_mixedness_report(catalog_state("W3"), 1)
    r = rows[0]
    assert not r.all_maximally_mixed
    assert np.isclose(r.linear[0], 1 - (4 / 9 + 1 / 9), atol=1e-12)
    assert np.isclose(r.linear[0], r.linear[1], atol=1e-12)  # min == max
