import pytest


class TestRunConfig:
    """Test suite for key = value run configuration files."""

    @pytest.fixture
    def train_parser(self):
        """The train subcommand parser."""
        from cli import build_parser

        return build_parser()["train"]

    def test_typed_defaults(self, tmp_path, train_parser):
        """Values are converted with the option's type."""
        from cli import RunConfig

        path = tmp_path / "run.cfg"
        path.write_text("# training run\niters = 3\nlayout = mps\nshare-weights = yes\nstop_at = 0.9\n")
        defaults = RunConfig.load(path).defaults_for(train_parser)
        assert defaults == {"iters": 3, "layout": "mps", "share_weights": True, "stop_at": 0.9}

    def test_missing_file(self, tmp_path):
        """Missing files raise CONFIG-003."""
        from cli import RunConfig
        from core.exceptions import ConfigurationError

        with pytest.raises(ConfigurationError) as excinfo:
            RunConfig.load(tmp_path / "absent.cfg")
        assert excinfo.value.error_code == "CONFIG-003"

    def test_unknown_keys(self, train_parser):
        """Keys the command does not accept raise CONFIG-010."""
        from cli import RunConfig
        from core.exceptions import ConfigurationError

        with pytest.raises(ConfigurationError) as excinfo:
            RunConfig({"iters": "3", "sweep": "bond"}, "run.cfg").defaults_for(train_parser)
        assert excinfo.value.error_code == "CONFIG-010"
        assert excinfo.value.details["keys"] == ["sweep"]

    @pytest.mark.parametrize("key,value", [("iters", "many"), ("layout", "mera"), ("share_weights", "maybe")])
    def test_bad_values(self, train_parser, key, value):
        """Values that do not convert raise CONFIG-011."""
        from cli import RunConfig
        from core.exceptions import ConfigurationError

        with pytest.raises(ConfigurationError) as excinfo:
            RunConfig({key: value}).defaults_for(train_parser)
        assert excinfo.value.error_code == "CONFIG-011"

    def test_int_list(self):
        """Comma-separated integer options."""
        import argparse

        from cli.commands import int_list

        assert int_list("1, 2,3") == [1, 2, 3]
        with pytest.raises(argparse.ArgumentTypeError):
            int_list("1,x")

    def test_direction_spec(self):
        """Direction specs map labels to in or out."""
        from cli.commands import parse_direction_spec
        from core.exceptions import ValidationError

        assert parse_direction_spec("a=in, b:out,*=out") == {"a": "in", "b": "out", "*": "out"}
        assert parse_direction_spec(None) == {}
        with pytest.raises(ValidationError):
            parse_direction_spec("a=sideways")
