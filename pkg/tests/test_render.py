import xml.etree.ElementTree as ET
from collections import Counter

import pytest

from dyck4d import (Axis, AxisSet, ROLE_COLORS, WrongArity, double_tesseract,
                    edge_list_text, parse_word, project, render_grid_2d,
                    render_wireframe, word_to_path)

SVG_NS = "{http://www.w3.org/2000/svg}"


def classes(svg):
    root = ET.fromstring(svg)
    return Counter(el.get("class") for el in root.iter() if el.get("class"))


def elements_of_class(svg, css_class):
    root = ET.fromstring(svg)
    return [el for el in root.iter() if el.get("class") == css_class]


class TestGrid:
    def test_lr_grid_structure(self):
        svg = render_grid_2d(AxisSet.of("lr"), 6)
        counts = classes(svg)
        assert counts["grid"] == 14  # 7 vertical + 7 horizontal isolines
        assert counts["diagonal"] == 1
        diagonal = elements_of_class(svg, "diagonal")[0]
        assert diagonal.get("stroke") == ROLE_COLORS["blue-j"]
        assert diagonal.get("stroke-dasharray") is not None

    def test_ij_mountain_frame(self):
        svg = render_grid_2d(AxisSet.of("ij"), 1, project(word_to_path(parse_word("()")), AxisSet.of("ij")))
        counts = classes(svg)
        assert counts["grid"] == 3 + 2  # i = 0..2 vertical, j = 0..1 horizontal
        assert counts["path"] == 1
        # pixel mapping: 40 px/unit, 20 px margin, y flipped (j max = 1)
        polyline = elements_of_class(svg, "path")[0]
        assert polyline.get("points") == "20.00,60.00 60.00,20.00 100.00,60.00"

    def test_no_diagonal_outside_lr(self):
        assert classes(render_grid_2d(AxisSet.of("ij"), 4))["diagonal"] == 0

    def test_grid_line_colors_follow_axes(self):
        svg = render_grid_2d(AxisSet.of("lr"), 2)
        strokes = {el.get("stroke") for el in elements_of_class(svg, "grid")}
        assert strokes == {ROLE_COLORS["yellow-l"], ROLE_COLORS["red-r"]}

    def test_wrong_arity(self):
        with pytest.raises(WrongArity):
            render_grid_2d(AxisSet.of("ijl"), 4)

    def test_mismatched_projection(self):
        proj = project(word_to_path(parse_word("()")), AxisSet.of("ij"))
        with pytest.raises(ValueError):
            render_grid_2d(AxisSet.of("lr"), 1, proj)

    def test_deterministic(self):
        a = render_grid_2d(AxisSet.of("lr"), 6, project(word_to_path(parse_word("()()()()()()")), AxisSet.of("lr")))
        b = render_grid_2d(AxisSet.of("lr"), 6, project(word_to_path(parse_word("()()()()()()")), AxisSet.of("lr")))
        assert a == b


class TestWireframe:
    def test_box_orthographic(self):
        box = double_tesseract(2)
        svg, edges = render_wireframe(box, "orthographic-3d")
        counts = classes(svg)
        assert counts["vertex"] == 16
        assert counts["edge"] == 32
        assert counts["anchor"] == 0

    def test_cell_orthographic(self):
        box = double_tesseract(1)
        svg, _ = render_wireframe(box.cell(Axis.J, 0), "orthographic-3d")
        counts = classes(svg)
        assert counts["vertex"] == 8
        assert counts["edge"] == 12

    def test_schlegel_structure(self):
        box = double_tesseract(6)
        svg, _ = render_wireframe(box, "schlegel")
        counts = classes(svg)
        assert counts["vertex"] == 16
        assert counts["edge"] == 32
        assert counts["anchor"] == 3

    def test_triangle_overlay_flag(self):
        box = double_tesseract(6)
        bare, _ = render_wireframe(box, "schlegel")
        overlaid, _ = render_wireframe(box, "schlegel", include_triangle=True)
        assert classes(bare)["side-blue"] == 0
        for name in ("side-blue", "side-red", "side-yellow"):
            assert classes(overlaid)[name] == 1

    def test_edge_colors_follow_varying_axis(self):
        box = double_tesseract(3)
        svg, _ = render_wireframe(box, "orthographic-3d")
        strokes = Counter(el.get("stroke") for el in elements_of_class(svg, "edge"))
        # 8 edges per axis
        assert strokes == Counter({ROLE_COLORS["green-i"]: 8, ROLE_COLORS["blue-j"]: 8,
                                   ROLE_COLORS["yellow-l"]: 8, ROLE_COLORS["red-r"]: 8})

    def test_deterministic(self):
        box = double_tesseract(6)
        assert render_wireframe(box, "schlegel", True) == render_wireframe(box, "schlegel", True)

    def test_unknown_style(self):
        with pytest.raises(ValueError):
            render_wireframe(double_tesseract(2), "perspective")

    def test_schlegel_needs_full_box(self):
        box = double_tesseract(2)
        with pytest.raises(ValueError):
            render_wireframe(box.cell(Axis.I, 0), "schlegel")

    def test_no_projected_vertex_collisions(self):
        from dyck4d.render import _ortho_point, _schlegel_point
        for n in range(1, 9):
            box = double_tesseract(n)
            assert len({_ortho_point(v) for v in box.vertices}) == 16
            assert len({_schlegel_point(v, n) for v in box.vertices}) == 16


class TestEdgeList:
    def test_format(self):
        box = double_tesseract(1)
        text = edge_list_text(box)
        lines = text.splitlines()
        assert len(lines) == 48
        assert lines[0] == "v 0 0 0 0"
        assert lines[15] == "v 2 1 1 1"
        assert all(line.startswith("v ") for line in lines[:16])
        assert all(line.startswith("e ") for line in lines[16:])

    def test_indices_in_range(self):
        box = double_tesseract(4)
        text = edge_list_text(box)
        for line in text.splitlines()[16:]:
            _, a, b = line.split()
            assert 0 <= int(a) < int(b) < 16

    def test_same_for_both_styles(self):
        box = double_tesseract(3)
        _, a = render_wireframe(box, "orthographic-3d")
        _, b = render_wireframe(box, "schlegel")
        assert a == b == edge_list_text(box)


class TestSvgHygiene:
    def documents(self):
        box = double_tesseract(6)
        yield render_grid_2d(AxisSet.of("lr"), 6)
        yield render_grid_2d(AxisSet.of("ij"), 3, project(word_to_path(parse_word("((()))")), AxisSet.of("ij")))
        yield render_grid_2d(AxisSet.of("il"), 2)
        yield render_wireframe(box, "orthographic-3d", True)[0]
        yield render_wireframe(box, "schlegel", True)[0]
        yield render_wireframe(box.cell(Axis.L, 6), "orthographic-3d")[0]

    def test_well_formed_xml(self):
        for svg in self.documents():
            ET.fromstring(svg)

    def test_only_role_colors_referenced(self):
        allowed = set(ROLE_COLORS.values())
        for svg in self.documents():
            root = ET.fromstring(svg)
            for el in root.iter():
                for attr in ("stroke", "fill"):
                    value = el.get(attr)
                    if value and value != "none":
                        assert value in allowed, (attr, value)

    def test_empty_scene_renders(self):
        from dyck4d.render import Scene
        ET.fromstring(Scene().to_svg())
