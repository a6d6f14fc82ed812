"""Sparse pipeline against the brute-force dense oracle."""

import numpy as np
import pytest

from spin7.dense import (
    dense_components,
    dense_full_contraction,
    dense_star,
    dense_wedge,
    parity,
)
from spin7.forms import (
    FrameMetric,
    KForm,
    canonical_indices,
    full_contraction,
    hodge_star,
    norm_sq,
    wedge,
)
from spin7.structure import canonical_phi_form

N_SWEEP = 100


def random_form(rng, degree, sparsity=0.6):
    coeffs = {idx: rng.standard_normal()
              for idx in canonical_indices(degree) if rng.random() <= sparsity}
    return KForm(degree, coeffs)


def canonical_entries(arr):
    k = arr.ndim
    return {idx: arr[idx] for idx in canonical_indices(k)}


def test_parity_agrees_with_lookup():
    assert parity((0, 1, 2)) == 1
    assert parity((1, 0, 2)) == -1
    assert parity((1, 1)) == 0
    assert parity(tuple(range(8))) == 1


def test_dense_components_of_monomial():
    arr = dense_components(KForm.monomial((0, 1)))
    assert np.count_nonzero(arr) == 2
    assert arr[0, 1] == 1.0 and arr[1, 0] == -1.0


@pytest.mark.parametrize("degree", [0, 1, 2, 3, 4])
def test_dense_components_antisymmetric_everywhere(degree, rng):
    arr = dense_components(random_form(rng, degree))
    if degree < 2:
        return
    swapped = np.swapaxes(arr, 0, 1)
    assert np.array_equal(arr, -swapped)


@pytest.mark.parametrize("degree", [0, 1, 2, 3, 4])
def test_sparse_dense_round_trip_sweep(degree, rng):
    for _ in range(N_SWEEP):
        f = random_form(rng, degree)
        assert np.max(np.abs(dense_components(KForm.from_array(dense_components(f)))
                             - dense_components(f))) == 0.0


@pytest.mark.parametrize("ka,kb", [(1, 1), (1, 2), (2, 2), (1, 3), (0, 4)])
def test_wedge_oracle_sweep(ka, kb, rng):
    for _ in range(N_SWEEP):
        a, b = random_form(rng, ka), random_form(rng, kb)
        via_sparse = dense_components(wedge(a, b))
        via_dense = dense_wedge(dense_components(a), dense_components(b))
        assert np.max(np.abs(via_sparse - via_dense)) < 1e-12


@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_star_oracle_identity_metric_sweep(degree, rng):
    for _ in range(N_SWEEP):
        f = random_form(rng, degree)
        sparse = hodge_star(f)
        dense = dense_star(dense_components(f))
        for idx, val in canonical_entries(dense).items():
            assert abs(val - sparse.coeffs.get(idx, 0.0)) < 1e-12


@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_star_oracle_general_metric(degree, rng):
    for _ in range(10):
        a = rng.standard_normal((8, 8))
        g = a @ a.T + 8.0 * np.eye(8)
        m = FrameMetric(g)
        f = random_form(rng, degree)
        sparse = hodge_star(f, m)
        dense = dense_star(dense_components(f), g)
        for idx, val in canonical_entries(dense).items():
            assert abs(val - sparse.coeffs.get(idx, 0.0)) < 1e-10


def test_star_oracle_on_canonical_phi():
    phi = dense_components(canonical_phi_form())
    assert np.max(np.abs(dense_star(phi) - phi)) == 0.0


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_full_contraction_oracle(degree, rng):
    for _ in range(25):
        a, b = random_form(rng, degree), random_form(rng, degree)
        g = None
        assert abs(full_contraction(a, b)
                   - dense_full_contraction(dense_components(a), dense_components(b), g)) < 1e-10
        q = rng.standard_normal((8, 8))
        g = q @ q.T + 8.0 * np.eye(8)
        assert abs(full_contraction(a, b, FrameMetric(g))
                   - dense_full_contraction(dense_components(a), dense_components(b), g)) < 1e-9


def test_norm_convention_brute_force():
    # the torsion of the product example has squared norm 12 under the
    # all-tuples contraction; this is what pins the norm convention
    t = KForm.monomial((1, 2, 3)) + KForm.monomial((4, 5, 6))
    arr = dense_components(t)
    assert float(np.sum(arr * arr)) == 12.0
    assert norm_sq(t) == 12.0
