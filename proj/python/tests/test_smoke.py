import json
import math

import numpy as np
import pytest

import octeig as oe
from octeig import basis


def worked_example():
    return oe.Herm3(0, 0, 0, basis.i, basis.j, basis.l)


def test_octonion_products():
    assert basis.i * basis.j == basis.k
    assert basis.j * basis.i == -basis.k
    assert oe.associator(basis.i, basis.j, basis.l) == 2.0 * basis.kl
    x = oe.Octonion([1, 2, 3, 4, 5, 6, 7, 8])
    assert math.isclose(x.norm() ** 2, 204.0)
    assert (x * x.inverse() - basis.one).norm() < 1e-14


def test_worked_example_families():
    a = worked_example()
    assert oe.r_roots(a) == (2.0, -2.0)
    s = oe.solve3(a)
    assert not s.doubled
    assert list(s.families[0].eigenvalues) == [-1.0, -1.0, 2.0]
    assert list(s.families[1].eigenvalues) == [-2.0, 1.0, 1.0]
    for f in s.families:
        res = oe.family_residuals(a, f)
        assert res.eigen <= 1e-9 and res.reconstruction <= 1e-8
    clusters = oe.spectrum_with_multiplicity(a)
    assert [c.value for c in clusters] == pytest.approx([-2, -1, 1, 2], abs=1e-10)
    assert [c.count for c in clusters] == [4, 8, 8, 4]


@pytest.mark.parametrize("seed", range(1, 11))
def test_random_matches_real_embedding(seed):
    a = oe.random_herm3(seed, "octonionic")
    s = oe.solve3(a)
    analytic = sorted(x for f in s.families for x in f.eigenvalues for _ in range(4))
    oracle = np.linalg.eigvalsh(oe.embed(a))
    assert np.allclose(analytic, oracle, atol=1e-8)
    assert np.allclose(oe.jacobi_eigenvalues(a), oracle, atol=1e-8)
    for f in s.families:
        for lam, v in zip(f.eigenvalues, f.eigenvectors):
            assert oe.verify_right_eigen(a, v, oe.Octonion(lam)) <= 1e-9 * (1 + 8)


def test_two_by_two():
    a = oe.Herm2(0, 0, basis.one + basis.i)
    l = oe.eigenvalues2(a)
    assert l == pytest.approx((-math.sqrt(2), math.sqrt(2)))
    pairs = oe.decompose2(a)
    for p in pairs:
        assert oe.verify_right_eigen(a, p.eigenvector, oe.Octonion(p.eigenvalue)) < 1e-12


def test_non_real_right_eigenvalue():
    a = oe.Herm2(1, 1, basis.i)
    assert oe.verify_right_eigen(a, [basis.j, basis.l], basis.one - basis.kl) == 0.0
    assert oe.verify_left_eigen(a, [basis.one, basis.k], basis.one - basis.j) == 0.0


def test_commands_and_round_trip():
    code, text, _ = oe.cmd_random(7, "quaternionic", 2.0)
    assert code == 0
    a = oe.parse_matrix(text)
    assert oe.serialize_matrix(a) == text
    code, out, _ = oe.run_eigen(a)
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert oe.run_verify(a)[0] == 0
    assert oe.run_verify(a, corrupt=True)[0] == 4
    assert oe.run_oracle(a)[0] == 0
    with pytest.raises(ValueError):
        oe.parse_matrix('{"dim": 3}')
