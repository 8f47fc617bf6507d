import re
import threading

import pytest

from blpcalc.figures import figure
from blpcalc.ordinal import OMEGA
from blpcalc.pattern import ZERO_BLP, copyable, named, palpha
from blpcalc.render import RenderOptions, highlighted_rows, render, render_ascii, render_png, render_svg

from .conftest import GOLDEN

ASCII = RenderOptions()
SVG = RenderOptions(format="svg")


def cases():
    return {
        "zero": (ZERO_BLP, False),
        "copy_ex1_p": (figure("copy_ex1_p"), True),
        "p_init": (named("p_init"), False),
    }


@pytest.mark.parametrize("name", ["zero", "copy_ex1_p", "p_init"])
@pytest.mark.parametrize("fmt,ext", [("ascii", "txt"), ("svg", "svg")])
def test_golden(name, fmt, ext):
    p, hl = cases()[name]
    got = render(p, RenderOptions(format=fmt, highlight_copy_rows=hl))
    assert got == (GOLDEN / f"{name}.{ext}").read_text()


def test_ascii_examples():
    assert render_ascii(ZERO_BLP).splitlines()[0] == "o-o-o  l=1"
    assert render_ascii(palpha(OMEGA)).splitlines()[-1] == "o-o-o-o-o-o  l=3"


def test_ascii_gaps_and_width():
    lines = render_ascii(named("p_init")).splitlines()
    assert lines[4].startswith("o-o-o-o---o-o  ")
    wide = render_ascii(ZERO_BLP, RenderOptions(cell_width=3)).splitlines()
    assert wide[0] == "o--o--o  l=1"


def test_ascii_highlight_uses_capitals():
    p = figure("copy_ex1_p")
    lines = render_ascii(p, RenderOptions(highlight_copy_rows=True)).splitlines()
    marked = highlighted_rows(p, RenderOptions(highlight_copy_rows=True))
    for i, line in enumerate(lines, 1):
        assert ("O" in line) == (i in marked)


def test_highlight_only_when_copyable():
    p = figure("copy_ex2_copied")
    assert not copyable(p)
    assert highlighted_rows(p, RenderOptions(highlight_copy_rows=True)) == frozenset()
    assert highlighted_rows(figure("copy_ex1_p"), ASCII) == frozenset()


def circles(svg):
    return re.findall(r'<circle cx="(\d+)" cy="(\d+)" r="5" fill="([^"]+)"', svg)


@pytest.mark.parametrize("name", ["p_start", "p_init", "p_BO", "p_prime", "copy_ex1_p"])
def test_svg_circle_count_matches_entries(name):
    p = figure(name)
    svg = render_svg(p, SVG)
    assert len(circles(svg)) == sum(len(r.entries) for r in p.rows)
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
    assert svg.endswith("</svg>\n")


def test_svg_counts():
    assert len(circles(render_svg(ZERO_BLP, SVG))) == 7
    assert len(circles(render_svg(named("p_init"), SVG))) == 39
    hl = render_svg(figure("copy_ex1_p"), RenderOptions(format="svg", highlight_copy_rows=True))
    assert sum(1 for c in circles(hl) if c[2] != "white") == 3


def test_svg_positions():
    p = named("p_init")
    cs = circles(render_svg(p, SVG))
    want = [(str(20 + 20 * c), str(20 + 20 * (i - 1))) for i, r in enumerate(p.rows, 1) for c in r.entries]
    assert [c[:2] for c in cs] == want


def test_png_smoke(tmp_path):
    out = render_png(named("p_init"), tmp_path / "p.png", RenderOptions(format="png", highlight_copy_rows=True))
    data = out.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 1000


def test_png_is_reproducible(tmp_path):
    a = render_png(ZERO_BLP, tmp_path / "a.png").read_bytes()
    b = render_png(ZERO_BLP, tmp_path / "b.png").read_bytes()
    assert a == b


def test_render_rejects_png_to_text():
    with pytest.raises(ValueError):
        render(ZERO_BLP, RenderOptions(format="png"))
    with pytest.raises(ValueError):
        RenderOptions(format="gif")
    with pytest.raises(ValueError):
        RenderOptions(cell_width=0)


def test_render_threads():
    out = []

    def work():
        out.append(render_svg(named("p_BO"), SVG))

    ts = [threading.Thread(target=work) for _ in range(6)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert len(set(out)) == 1
