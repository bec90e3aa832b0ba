import numpy as np
import pytest


class TestBarsAndStripes:
    """Test suite for bars-and-stripes generation."""

    def test_two_by_two(self):
        """The 2x2 set has two bars then two stripes."""
        from services.detection import bas_images

        images = bas_images(2)
        assert [name for _, _, name in images] == ["bars_01", "bars_10", "stripes_01", "stripes_10"]
        assert images[0][0].tolist() == [[0.0, 1.0], [0.0, 1.0]]
        assert images[2][0].tolist() == [[0.0, 0.0], [1.0, 1.0]]
        assert [label for _, label, _ in images] == [0, 0, 1, 1]

    def test_structure(self):
        """Bars have constant columns and stripes constant rows."""
        from services.detection import bas_images

        for pixels, label, _ in bas_images(4):
            axis = 0 if label == 0 else 1
            assert np.all(pixels == np.take(pixels, [0], axis=axis))
            assert 0 < pixels.sum() < pixels.size

    @pytest.mark.parametrize("n,count", [(2, 4), (3, 12), (4, 28)])
    def test_dataset_size(self, n, count):
        """There are 2^(n+1) - 4 images, split in half."""
        from services.detection import generate_bas

        dataset = generate_bas(n, seed=1)
        assert len(dataset) == count
        assert len(dataset.train) == count // 2
        assert dataset.labels().sum() == count // 2
        assert dataset.n_pixels == n * n

    def test_seeded_split(self):
        """Splits depend only on the seed."""
        from services.detection import generate_bas

        assert generate_bas(4, seed=2).train == generate_bas(4, seed=2).train

    def test_too_small(self):
        """Sides below 2 raise DetectionError."""
        from core.exceptions import DetectionError
        from services.detection import bas_images

        with pytest.raises(DetectionError):
            bas_images(1)

    def test_sampled_large_side(self):
        """Sampled sets hold distinct bars and stripes even at side 256."""
        from services.detection import sample_bas

        dataset = sample_bas(256, n_images=8, seed=3)
        assert len(dataset) == 8
        assert dataset.n_pixels == 256 * 256
        assert len(set(dataset.names)) == 8
        assert dataset.labels().sum() == 4
        for pixels, label in dataset.items:
            image = pixels.reshape(256, 256)
            axis = 0 if label == 0 else 1
            assert np.all(image == np.take(image, [0], axis=axis))
            assert 0 < image.sum() < image.size

    def test_sampled_set_limits(self):
        """Requests beyond the full set raise DetectionError."""
        from core.exceptions import DetectionError
        from services.detection import sample_bas

        assert len(sample_bas(2, n_images=4)) == 4
        with pytest.raises(DetectionError):
            sample_bas(2, n_images=6)
        with pytest.raises(DetectionError):
            sample_bas(4, n_images=1)
