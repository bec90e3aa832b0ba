import numpy as np
import pytest


class TestDenseTensor:
    """Test suite for labeled dense tensors."""

    def test_matrix_product_by_shared_label(self):
        """Contracting the shared index of two matrices is a matrix product."""
        from tensornet import DenseTensor, contract_pair

        a = DenseTensor(np.array([[1, 2], [3, 4]]), ("i", "j"))
        b = DenseTensor(np.array([[5, 6], [7, 8]]), ("j", "k"))
        result = contract_pair(a, b)
        assert result.labels == ("i", "k")
        assert np.allclose(result.data, [[19, 22], [43, 50]])

    def test_outer_product_without_shared_labels(self):
        """No shared labels gives the outer product."""
        from tensornet import DenseTensor, contract_pair

        a = DenseTensor(np.array([1, 2]), ("i",))
        b = DenseTensor(np.array([3, 4, 5]), ("j",))
        result = contract_pair(a, b)
        assert result.shape == (2, 3)
        assert np.allclose(result.data, np.outer([1, 2], [3, 4, 5]))

    def test_dimension_mismatch(self):
        """Shared labels of different dimensions raise TensorNetworkError."""
        from core.exceptions import TensorNetworkError
        from tensornet import DenseTensor, contract_pair

        a = DenseTensor(np.ones((2, 3)), ("i", "j"))
        b = DenseTensor(np.ones((2, 2)), ("j", "k"))
        with pytest.raises(TensorNetworkError):
            contract_pair(a, b)

    def test_uncontracted_common_label(self):
        """A common label left out of shared_labels is an error."""
        from core.exceptions import TensorNetworkError
        from tensornet import DenseTensor, contract_pair

        a = DenseTensor(np.ones((2, 2)), ("i", "j"))
        b = DenseTensor(np.ones((2, 2)), ("i", "j"))
        with pytest.raises(TensorNetworkError):
            contract_pair(a, b, ["i"])
        assert contract_pair(a, b).value.real == pytest.approx(4.0)

    def test_label_checks(self):
        """Labels must be distinct and match the rank."""
        from core.exceptions import TensorNetworkError
        from tensornet import DenseTensor

        with pytest.raises(TensorNetworkError):
            DenseTensor(np.ones((2, 2)), ("i", "i"))
        with pytest.raises(TensorNetworkError):
            DenseTensor(np.ones((2, 2)), ("i",))

    def test_trace_and_transpose(self):
        """Trace and transpose work by label."""
        from tensornet import DenseTensor

        t = DenseTensor(np.arange(8.0).reshape(2, 2, 2), ("a", "b", "c"))
        traced = t.trace("a", "c")
        assert traced.labels == ("b",)
        assert np.allclose(traced.data, [0 + 5, 2 + 7])

        moved = t.transpose(("c", "a", "b"))
        assert moved.allclose(t)
        assert moved.shape == (2, 2, 2)
