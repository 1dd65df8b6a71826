import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nrbounds import (KINDS, ConfigError, Ensemble, gen_matrix, gen_partner,
                      numerical_radius, read_matrix, write_matrix)
from nrbounds.ensembles import complex_gaussian, haar_unitary, stream
from nrbounds.matrix_io import matrix_from_dict, matrix_to_dict


class TestEnsembles:
    def test_shift(self):
        assert np.array_equal(gen_matrix(Ensemble("nilpotent_shift", 2, 1), 0), [[0, 1], [0, 0]])

    @pytest.mark.parametrize("kind", KINDS)
    def test_deterministic(self, kind):
        e = Ensemble(kind, 4, 10, seed=99)
        assert np.array_equal(gen_matrix(e, 7), gen_matrix(e, 7))
        assert np.array_equal(gen_partner(e, 7), gen_partner(e, 7))

    def test_order_independent(self):
        big, small = Ensemble("ginibre", 3, 50, 5), Ensemble("ginibre", 3, 8, 5)
        assert np.array_equal(gen_matrix(big, 7), gen_matrix(small, 7))

    def test_streams_distinct(self):
        e = Ensemble("ginibre", 3, 5, 1)
        mats = [gen_matrix(e, i) for i in range(5)] + [gen_partner(e, 0)]
        mats.append(gen_matrix(Ensemble("ginibre", 3, 5, 2), 0))
        flat = {m.tobytes() for m in mats}
        assert len(flat) == len(mats)

    def test_hermitian_exact(self):
        e = Ensemble("hermitian", 6, 20, 3)
        for i in range(20):
            H = gen_matrix(e, i)
            assert np.array_equal(H, H.conj().T)

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_normal(self, n):
        e = Ensemble("normal", n, 20, 4)
        for i in range(20):
            A = gen_matrix(e, i)
            nA = np.linalg.norm(A, 2)
            comm = A.conj().T @ A - A @ A.conj().T
            assert np.linalg.norm(comm, 2) <= 1e-12 * nA ** 2
            assert abs(numerical_radius(A).value - nA) <= 1e-8

    def test_rank_one(self):
        A = gen_matrix(Ensemble("rank_one", 5, 1, 0), 0)
        s = np.linalg.svd(A, compute_uv=False)
        assert s[0] == pytest.approx(1.0) and s[1] <= 1e-14

    def test_complex_gaussian_moments(self):
        z = complex_gaussian(stream(0, "ginibre", 1, 0), 200_000)
        assert abs(z.real.var() - 0.5) < 0.01 and abs(z.imag.var() - 0.5) < 0.01
        assert abs(z.mean()) < 0.01
        assert abs(np.mean(z.real * z.imag)) < 0.01

    def test_haar_unitary(self):
        U = haar_unitary(stream(0, "normal", 5, 0), 5)
        assert np.allclose(U.conj().T @ U, np.eye(5), atol=1e-13)

    @pytest.mark.parametrize("kw", [dict(kind="wishart", dim=2, count=1), dict(kind="ginibre", dim=0, count=1),
                                    dict(kind="ginibre", dim=2, count=-1),
                                    dict(kind="ginibre", dim=2, count=1, seed=-1)])
    def test_invalid(self, kw):
        with pytest.raises(ConfigError):
            Ensemble(**kw)

    def test_index_range(self):
        with pytest.raises(IndexError):
            gen_matrix(Ensemble("ginibre", 2, 3), 3)


FINITE = st.floats(allow_nan=False, allow_infinity=False, width=64)


class TestMatrixIO:
    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 5).flatmap(
        lambda n: st.lists(FINITE, min_size=2 * n * n, max_size=2 * n * n)))
    def test_round_trip_bits(self, tmp_path_factory, vals):
        n = int(round(np.sqrt(len(vals) / 2)))
        A = (np.array(vals[: n * n]) + 1j * np.array(vals[n * n:])).reshape(n, n)
        path = tmp_path_factory.mktemp("io") / "m.json"
        write_matrix(path, A)
        B = read_matrix(path)
        assert A.view(np.uint64).tobytes() == B.view(np.uint64).tobytes()

    def test_format(self, tmp_path):
        path = tmp_path / "m.json"
        write_matrix(path, [[1, 2j], [3, 4]])
        obj = json.loads(path.read_text())
        assert obj == {"dim": 2, "re": [1.0, 0.0, 3.0, 4.0], "im": [0.0, 2.0, 0.0, 0.0]}

    def test_signed_zero(self, tmp_path):
        A = np.zeros((1, 1), dtype=complex)
        A.real = -0.0
        A.imag = -0.0
        path = tmp_path / "z.json"
        write_matrix(path, A)
        assert np.signbit(read_matrix(path)[0, 0].real)
        assert np.signbit(read_matrix(path)[0, 0].imag)

    @pytest.mark.parametrize("obj", [{"dim": 2, "re": [1, 2, 3], "im": [0, 0, 0, 0]},
                                     {"re": [1], "im": [0]}, {"dim": 0, "re": [], "im": []},
                                     {"dim": 1, "re": ["x"], "im": [0]}])
    def test_malformed(self, obj):
        with pytest.raises(ValueError):
            matrix_from_dict(obj)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            matrix_to_dict([[np.inf]])
