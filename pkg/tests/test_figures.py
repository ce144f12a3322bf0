import json

from plactic import cli
from plactic.crystal import crystal_graph
from plactic.cyclage import cyclage_graph
from plactic.figures import plot_crystal, plot_cyclage

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_crystal_figure(tmp_path):
    path = plot_crystal(crystal_graph((2, 1), 2), tmp_path / "gamma.png", color_orbits=True)
    assert path.read_bytes().startswith(PNG_MAGIC)


def test_cyclage_figure(tmp_path):
    path = plot_cyclage(cyclage_graph((2, 2, 1), 2), tmp_path / "sub" / "h.png", tree=True)
    assert path.read_bytes().startswith(PNG_MAGIC)


def test_cli_writes_figure_next_to_payload(tmp_path, capsys):
    target = tmp_path / "g.png"
    code = cli.main(["crystal", "--shape", "2,2", "--rank", "3", "--figure", str(target), "--orbits"])
    out = capsys.readouterr().out
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 20
    assert target.read_bytes().startswith(PNG_MAGIC)
