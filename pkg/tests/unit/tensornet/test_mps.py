import numpy as np
import pytest


class TestMPS:
    """Test suite for MPS factorization."""

    @pytest.fixture
    def ghz(self):
        """Four-index GHZ tensor: 1 where all indices agree."""
        from tensornet import DenseTensor

        data = np.zeros((2, 2, 2, 2))
        data[0, 0, 0, 0] = data[1, 1, 1, 1] = 1.0
        return DenseTensor(data, ("a", "b", "c", "d"))

    def test_ghz_bond_dimensions(self, ghz):
        """A GHZ tensor factors with bond dimension 2 everywhere."""
        from tensornet import bond_dimensions, mps_factorize

        assert bond_dimensions(mps_factorize(ghz)) == [2, 2, 2]

    def test_exact_reconstruction(self):
        """Without a bond limit the chain reproduces the tensor."""
        from tensornet import DenseTensor, mps_factorize, mps_reconstruct

        data = np.random.default_rng(5).normal(size=(2, 3, 2, 2))
        a = DenseTensor(data, ("p", "q", "r", "s"))
        rebuilt = mps_reconstruct(mps_factorize(a))
        assert rebuilt.allclose(a)

    def test_site_labels(self, ghz):
        """Sites carry (phys, bond), (bond, phys, bond) and (bond, phys) labels."""
        from tensornet import mps_factorize

        factors = mps_factorize(ghz)
        assert factors[0].labels == ("a", "bond0")
        assert factors[1].labels == ("bond0", "b", "bond1")
        assert factors[-1].labels == ("bond2", "d")

    def test_bond_labels_avoid_physical_names(self):
        """Bond labels skip names already used by the tensor."""
        from tensornet import DenseTensor, mps_factorize

        a = DenseTensor(np.ones((2, 2)), ("bond0", "x"))
        factors = mps_factorize(a)
        assert factors[0].labels == ("bond0", "bond1")

    def test_truncation(self):
        """Limiting the bond to 1 loses weight on an entangled tensor."""
        from tensornet import DenseTensor, bond_dimensions, mps_factorize, truncation_error

        bell = DenseTensor(np.eye(2) / np.sqrt(2), ("a", "b"))
        assert bond_dimensions(mps_factorize(bell, max_bond=1)) == [1]
        assert truncation_error(bell, max_bond=1) == pytest.approx(0.5 ** 0.5)
        assert truncation_error(bell) == pytest.approx(0.0, abs=1e-12)

    def test_argument_checks(self):
        """Rank-1 tensors and max_bond < 1 are rejected."""
        from core.exceptions import TensorNetworkError
        from tensornet import DenseTensor, mps_factorize

        with pytest.raises(TensorNetworkError):
            mps_factorize(DenseTensor(np.ones(2), ("a",)))
        with pytest.raises(TensorNetworkError):
            mps_factorize(DenseTensor(np.ones((2, 2)), ("a", "b")), max_bond=0)

    def test_mps_network_shape(self, ghz):
        """The chain network has n-1 bonds and n open edges."""
        from tensornet import mps_factorize, mps_network

        tn = mps_network(mps_factorize(ghz))
        assert len(tn.internal_edges()) == 3
        assert [e.label for e in tn.open_edges()] == ["a", "b", "c", "d"]
