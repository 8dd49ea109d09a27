import json

import numpy as np
import pytest

from schwinger_figures import FigureSpec, SpecError, load_specs, render
from schwinger_figures.cli import EXIT_CONFIG, EXIT_OK, main


def spec_for(golden, tmp_path, kind, input_name, **options):
    return FigureSpec(kind=kind, input=golden / input_name,
                      out=tmp_path / f"{kind}.png", options=options)


class TestRenderers:
    @pytest.mark.parametrize("kind,input_name,options", [
        ("spectrum", "spectrum.csv", {}),
        ("scale-profile", "scatter_icut.csv", {}),
        ("info-lattice", "scatter_infolattice.csv", {"time": 1.0}),
        ("spacetime", "scatter_entropy.csv", {"value": "S"}),
        ("waterfall", "string_ibar.csv", {"stride": 2}),
        ("peak-scale", "string_lmax.csv", {}),
    ])
    def test_kind_renders_without_mutation(self, golden, tmp_path, kind,
                                           input_name, options):
        spec = spec_for(golden, tmp_path, kind, input_name, **options)
        result = render(spec)
        assert result.out.is_file() and result.out.stat().st_size > 0
        assert result.unmutated

    def test_field_heatmap_uses_value_option(self, golden, tmp_path):
        spec = spec_for(golden, tmp_path, "spacetime", "string_field.csv",
                        value="L")
        result = render(spec)
        assert "L" in result.plotted

    def test_info_lattice_time_selection(self, golden, tmp_path):
        early = render(spec_for(golden, tmp_path, "info-lattice",
                                "scatter_infolattice.csv", time=0.0))
        late = render(FigureSpec(
            kind="info-lattice", input=golden / "scatter_infolattice.csv",
            out=tmp_path / "late.png", options={"time": 3.0}))
        assert not np.array_equal(early.plotted["i"], late.plotted["i"])

    def test_deterministic_bytes(self, golden, tmp_path):
        a = render(spec_for(golden, tmp_path / "a", "spectrum",
                            "spectrum.csv"))
        b = render(spec_for(golden, tmp_path / "b", "spectrum",
                            "spectrum.csv"))
        assert a.out.read_bytes() == b.out.read_bytes()

    def test_unknown_kind_rejected(self, golden, tmp_path):
        with pytest.raises(SpecError):
            FigureSpec(kind="pie-chart", input=golden / "spectrum.csv",
                       out=tmp_path / "x.png")


class TestSpecFiles:
    def test_single_object_and_relative_paths(self, golden, tmp_path):
        spec_file = tmp_path / "fig.json"
        (tmp_path / "spectrum.csv").write_bytes(
            (golden / "spectrum.csv").read_bytes())
        spec_file.write_text(json.dumps(
            {"kind": "spectrum", "input": "spectrum.csv",
             "out": "out/spec.png", "title": "levels"}))
        specs = load_specs(spec_file)
        assert len(specs) == 1
        assert specs[0].input == tmp_path / "spectrum.csv"
        assert specs[0].title == "levels"

    def test_missing_key(self, tmp_path):
        spec_file = tmp_path / "fig.json"
        spec_file.write_text(json.dumps({"kind": "spectrum"}))
        with pytest.raises(SpecError):
            load_specs(spec_file)

    def test_invalid_json(self, tmp_path):
        spec_file = tmp_path / "fig.json"
        spec_file.write_text("{broken")
        with pytest.raises(SpecError):
            load_specs(spec_file)

    def test_empty_list(self, tmp_path):
        spec_file = tmp_path / "fig.json"
        spec_file.write_text("[]")
        with pytest.raises(SpecError):
            load_specs(spec_file)


class TestCli:
    def test_batch_render(self, golden, tmp_path, capsys):
        spec_file = tmp_path / "batch.json"
        spec_file.write_text(json.dumps([
            {"kind": "spectrum", "input": str(golden / "spectrum.csv"),
             "out": "spectrum.png"},
            {"kind": "peak-scale", "input": str(golden / "string_lmax.csv"),
             "out": "lmax.png"},
        ]))
        assert main(["render", "--spec", str(spec_file)]) == EXIT_OK
        assert (tmp_path / "spectrum.png").is_file()
        assert (tmp_path / "lmax.png").is_file()

    def test_missing_spec_file(self, tmp_path, capsys):
        code = main(["render", "--spec", str(tmp_path / "absent.json")])
        assert code == EXIT_CONFIG

    def test_schema_mismatch_no_output(self, golden, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("x,y\n1,2\n")
        spec_file = tmp_path / "fig.json"
        spec_file.write_text(json.dumps(
            {"kind": "spectrum", "input": str(bad), "out": "out/fig.png"}))
        assert main(["render", "--spec", str(spec_file)]) == EXIT_CONFIG
        assert not (tmp_path / "out").exists()
