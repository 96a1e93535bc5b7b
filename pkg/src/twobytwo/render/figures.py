"""Builders for every figure family, plus the format dispatch.

Each builder produces a `Scene` of primitives; `render_figure` serializes it
through the TikZ or SVG backend.  Primitives carry tags so tests (and SVG
consumers) can count semantic elements: "cce-edge", "ne-point", and so on.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from ..core import (
    Game,
    JointDistribution,
    MarginalPair,
    Player,
    conditional,
    marginals_from_joint,
    product_joint,
    format_rational,
)
from ..embedding import EmbeddingPoint
from ..equilibria import CcePolytope, NashSet, cce_polytope, nash_set
from ..graphs import BRGraph, br_graph, class_from_br_graph, ordinal_graph
from .canvas import ArrowLine, Circle, Line, Rect, Scene, Text
from .geometry import (
    Projection,
    TETRA_EDGES,
    TETRAHEDRON,
    hidden_tetra_edges,
    simplex_position,
)
from .style import (
    BLACK,
    BLUE,
    GRAY,
    LIGHT_GRAY,
    PURPLE,
    WHITE,
    StyleOptions,
    lerp_color,
    shade,
)


class UnsupportedFigureError(ValueError):
    """Raised for an unknown figure kind or an unsupported output format."""


class FigureKind(enum.Enum):
    ORD_GRAPH = "ordgraph"
    BR_GRAPH = "brgraph"
    PAYOFF_TABLE = "payoffs"
    JOINT = "joint"
    ROW_COND = "rowcond"
    COL_COND = "colcond"
    MARGINAL = "marginal"
    JOINT_MARGINAL = "jointmarginal"
    POLYTOPE = "polytope"
    EMBEDDING = "embedding"


@dataclass(frozen=True)
class EmbeddingFigureData:
    """Raw plotting data: angle pairs in degrees plus an optional heatmap."""

    points: tuple[tuple[float, float], ...] = ()
    heatmap: tuple[tuple[float, ...], ...] | None = None

    @classmethod
    def from_embedding_points(
        cls,
        points,
        heatmap=None,
    ) -> "EmbeddingFigureData":
        pairs = []
        for point in points:
            ra, ca = point.row_angle_degrees, point.col_angle_degrees
            if ra is None or ca is None:
                continue  # trivial players have no angle; they are not plotted
            pairs.append((ra, ca))
        return cls(points=tuple(pairs), heatmap=heatmap)


@dataclass(frozen=True)
class FigureSpec:
    kind: FigureKind
    payload: object
    style: StyleOptions = StyleOptions()


@dataclass(frozen=True)
class PolytopeScene:
    """The 3D content of a polytope figure before 2D serialization."""

    simplex_vertices: tuple[tuple[float, float, float], ...]
    polytope: CcePolytope
    nash: NashSet
    projection: Projection


# --- distribution glyphs --------------------------------------------------------


def _cell_rect(scene, x, y, w, h, fill, stroke, width, tag):
    scene.add(Rect(x=x, y=y, w=w, h=h, fill=fill, stroke=stroke, width=width, tag=tag))


def _build_joint(dist: JointDistribution, style: StyleOptions) -> Scene:
    s = style.size_pt
    cell = s / 2.0
    scene = Scene(width=s, height=s)
    for idx, prob in enumerate(dist.prob):
        r, c = divmod(idx, 2)
        _cell_rect(
            scene,
            c * cell,
            (1 - r) * cell,
            cell,
            cell,
            shade(BLACK, float(prob)),
            BLACK,
            style.stroke_width_pt,
            "joint-cell",
        )
    return scene


def _build_conditional(dist: JointDistribution, style: StyleOptions, player: Player) -> Scene:
    s = style.size_pt
    cell = s / 2.0
    scene = Scene(width=s, height=s)
    table = conditional(dist, player)
    color = style.player_colors[player.value]
    for which, row in enumerate(table.rows):
        for other, prob in enumerate(row) if row is not None else ():
            r, c = (which, other) if player is Player.ROW else (other, which)
            _cell_rect(
                scene,
                c * cell,
                (1 - r) * cell,
                cell,
                cell,
                shade(color, float(prob)),
                BLACK,
                style.stroke_width_pt,
                "cond-cell",
            )
        if row is None:
            for other in range(2):
                r, c = (which, other) if player is Player.ROW else (other, which)
                _cell_rect(
                    scene,
                    c * cell,
                    (1 - r) * cell,
                    cell,
                    cell,
                    WHITE,
                    LIGHT_GRAY,
                    style.stroke_width_pt,
                    "absent-cell",
                )
    return scene


def _marginal_bars(scene, m: MarginalPair, style: StyleOptions, origin, joint_side, bar):
    ox, oy = origin
    gap = 0.06 * joint_side
    cell = joint_side / 2.0
    row_color, col_color = style.player_colors
    for r, prob in enumerate((m.row_prob_a, 1 - m.row_prob_a)):
        _cell_rect(
            scene,
            ox + joint_side + gap,
            oy + bar + gap + (1 - r) * cell,
            bar,
            cell,
            shade(row_color, float(prob)),
            BLACK,
            style.stroke_width_pt,
            "marginal-row-cell",
        )
    for c, prob in enumerate((m.col_prob_a, 1 - m.col_prob_a)):
        _cell_rect(
            scene,
            ox + c * cell,
            oy,
            cell,
            bar,
            shade(col_color, float(prob)),
            BLACK,
            style.stroke_width_pt,
            "marginal-col-cell",
        )


def _build_marginal(dist: JointDistribution, style: StyleOptions) -> Scene:
    s = style.size_pt
    bar = 0.22 * s
    joint_side = s - bar - 0.06 * s
    scene = Scene(width=s, height=s)
    _marginal_bars(scene, marginals_from_joint(dist), style, (0.0, 0.0), joint_side, bar)
    return scene


def _build_joint_marginal(dist: JointDistribution, style: StyleOptions) -> Scene:
    s = style.size_pt
    bar = 0.22 * s
    joint_side = s - bar - 0.06 * s
    cell = joint_side / 2.0
    gap = 0.06 * joint_side
    scene = Scene(width=s, height=s)
    for idx, prob in enumerate(dist.prob):
        r, c = divmod(idx, 2)
        _cell_rect(
            scene,
            c * cell,
            bar + gap + (1 - r) * cell,
            cell,
            cell,
            shade(BLACK, float(prob)),
            BLACK,
            style.stroke_width_pt,
            "joint-cell",
        )
    _marginal_bars(scene, marginals_from_joint(dist), style, (0.0, 0.0), joint_side, bar)
    return scene


# --- payoff table ----------------------------------------------------------------


def _build_payoff_table(game: Game, style: StyleOptions) -> Scene:
    s = style.size_pt
    header = 0.18 * s
    side = s - header
    cell = side / 2.0
    scene = Scene(width=s, height=s)
    row_color, col_color = style.player_colors
    font = 0.11 * s

    for r in range(2):
        for c in range(2):
            x0, y0 = header + c * cell, (1 - r) * cell
            _cell_rect(scene, x0, y0, cell, cell, None, BLACK, style.stroke_width_pt, "payoff-cell")
            cx, cy = x0 + cell / 2.0, y0 + cell / 2.0
            scene.add(
                Text(
                    x=cx - 0.05 * cell,
                    y=cy,
                    content=format_rational(game.row[2 * r + c]),
                    size=font,
                    color=row_color,
                    anchor="east",
                    tag="payoff-row",
                ),
                Text(
                    x=cx + 0.05 * cell,
                    y=cy,
                    content=format_rational(game.col[2 * r + c]),
                    size=font,
                    color=col_color,
                    anchor="west",
                    tag="payoff-col",
                ),
            )
    for idx, label in enumerate("AB"):
        scene.add(
            Text(
                x=header + idx * cell + cell / 2.0,
                y=side + header / 2.0,
                content=label,
                size=font,
                color=BLACK,
                anchor="center",
                tag="header",
            ),
            Text(
                x=header / 2.0,
                y=(1 - idx) * cell + cell / 2.0,
                content=label,
                size=font,
                color=BLACK,
                anchor="center",
                tag="header",
            ),
        )
    return scene


# --- preference graphs -------------------------------------------------------------


def _node_positions(size: float) -> tuple[tuple[float, float], ...]:
    pad = 0.16 * size
    hi, lo = size - pad, pad
    return ((lo, hi), (hi, hi), (lo, lo), (hi, lo))  # AA, AB, BA, BB


def _shorten(p1, p2, trim):
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    norm = math.hypot(dx, dy) or 1.0
    ux, uy = dx / norm, dy / norm
    return (p1[0] + trim * ux, p1[1] + trim * uy), (p2[0] - trim * ux, p2[1] - trim * uy)


def _offset(p1, p2, amount):
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    norm = math.hypot(dx, dy) or 1.0
    nx, ny = -dy / norm, dx / norm
    return (
        (p1[0] + amount * nx, p1[1] + amount * ny),
        (p2[0] + amount * nx, p2[1] + amount * ny),
    )


def _add_nodes(scene: Scene, positions, size: float) -> None:
    for x, y in positions:
        scene.add(Circle(cx=x, cy=y, r=0.035 * size, fill=LIGHT_GRAY, tag="node"))


def _build_ord_graph(game: Game, style: StyleOptions) -> Scene:
    s = style.size_pt
    positions = _node_positions(s)
    scene = Scene(width=s, height=s)
    _add_nodes(scene, positions, s)
    trim = 0.055 * s
    for player in (Player.ROW, Player.COL):
        graph = ordinal_graph(game, player)
        sign = 1.0 if player is Player.ROW else -1.0
        color = style.player_colors[player.value]
        for lo, hi in graph.edges:
            a, b = _offset(positions[lo], positions[hi], sign * 0.02 * s)
            a, b = _shorten(a, b, trim)
            scene.add(
                ArrowLine(
                    x1=a[0], y1=a[1], x2=b[0], y2=b[1],
                    color=color,
                    width=style.stroke_width_pt,
                    tag=f"ord-edge-{'row' if player is Player.ROW else 'col'}",
                )
            )
    return scene


def _build_br_graph(game: Game, style: StyleOptions) -> Scene:
    s = style.size_pt
    positions = _node_positions(s)
    scene = Scene(width=s, height=s)
    _add_nodes(scene, positions, s)
    trim = 0.055 * s
    graph = br_graph(game)
    # (preference, cell where the chooser plays A, cell where they play B);
    # the arrow points to the preferred cell and is omitted on indifference.
    edges = (
        (graph.row_given_col_a, 0, 2),  # vertical, left column: AA <-> BA
        (graph.row_given_col_b, 1, 3),  # vertical, right column: AB <-> BB
        (graph.col_given_row_a, 0, 1),  # horizontal, top row: AA <-> AB
        (graph.col_given_row_b, 2, 3),  # horizontal, bottom row: BA <-> BB
    )
    for pref, cell_of_a, cell_of_b in edges:
        if pref is None:
            continue
        src, dst = (cell_of_b, cell_of_a) if pref == 0 else (cell_of_a, cell_of_b)
        a, b = _shorten(positions[src], positions[dst], trim)
        scene.add(
            ArrowLine(
                x1=a[0], y1=a[1], x2=b[0], y2=b[1],
                color=BLACK,
                width=style.stroke_width_pt * 1.4,
                tag="br-edge",
            )
        )
    return scene


# --- polytope ------------------------------------------------------------------------


def build_polytope_scene(game: Game, style: StyleOptions = StyleOptions()) -> PolytopeScene:
    return PolytopeScene(
        simplex_vertices=TETRAHEDRON,
        polytope=cce_polytope(game),
        nash=nash_set(game),
        projection=Projection(style.camera_azimuth_deg, style.camera_elevation_deg),
    )


def _fit_to_canvas(points_2d, size: float, margin: float):
    xs = [p[0] for p in points_2d]
    ys = [p[1] for p in points_2d]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (size - 2 * margin) / span
    x0, y0 = min(xs), min(ys)
    offx = (size - (max(xs) - x0) * scale) / 2.0
    offy = (size - (max(ys) - y0) * scale) / 2.0

    def place(point):
        return ((point[0] - x0) * scale + offx, (point[1] - y0) * scale + offy)

    return place


def _box_iso_fractions():
    return (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def _marginal_position(p: Fraction, q: Fraction, projection, place):
    dist = product_joint(MarginalPair(p, q))
    pos3 = simplex_position(tuple(float(v) for v in dist.prob))
    return place(projection.project(pos3))


def scene_from_polytope(ps: PolytopeScene, style: StyleOptions) -> Scene:
    s = style.size_pt
    scene = Scene(width=s, height=s)
    projection = ps.projection
    place = _fit_to_canvas(
        [projection.project(v) for v in ps.simplex_vertices], s, 0.12 * s
    )
    corners = [place(projection.project(v)) for v in ps.simplex_vertices]
    hidden = hidden_tetra_edges(projection)

    for i, j in TETRA_EDGES:
        if (i, j) in hidden:
            scene.add(
                Line(
                    x1=corners[i][0], y1=corners[i][1],
                    x2=corners[j][0], y2=corners[j][1],
                    color=LIGHT_GRAY,
                    width=style.stroke_width_pt * 0.8,
                    dashed=True,
                    tag="tetra-edge-hidden",
                )
            )

    vertex_xy = [
        place(projection.project(simplex_position(tuple(float(x) for x in v.prob))))
        for v in ps.polytope.vertices
    ]
    for i, j in ps.polytope.edges:
        scene.add(
            Line(
                x1=vertex_xy[i][0], y1=vertex_xy[i][1],
                x2=vertex_xy[j][0], y2=vertex_xy[j][1],
                color=PURPLE,
                width=style.stroke_width_pt * 1.4,
                tag="cce-edge",
            )
        )
    for x, y in vertex_xy:
        scene.add(Circle(cx=x, cy=y, r=0.016 * s, fill=PURPLE, tag="cce-vertex"))

    dot = 0.019 * s
    for box in ps.nash.components:
        if box.is_point:
            x, y = _marginal_position(box.p_low, box.q_low, projection, place)
            scene.add(Circle(cx=x, cy=y, r=dot, fill=BLUE, tag="ne-point"))
        elif box.is_segment:
            a = _marginal_position(box.p_low, box.q_low, projection, place)
            b = _marginal_position(box.p_high, box.q_high, projection, place)
            scene.add(
                Line(
                    x1=a[0], y1=a[1], x2=b[0], y2=b[1],
                    color=BLUE,
                    width=style.stroke_width_pt * 1.2,
                    dashed=True,
                    tag="ne-segment",
                )
            )
        else:
            # Full 2D component: draw straight iso-probability rules both ways.
            for t in _box_iso_fractions():
                p = box.p_low + t * (box.p_high - box.p_low)
                a = _marginal_position(p, box.q_low, projection, place)
                b = _marginal_position(p, box.q_high, projection, place)
                scene.add(
                    Line(
                        x1=a[0], y1=a[1], x2=b[0], y2=b[1],
                        color=BLUE,
                        width=style.stroke_width_pt * 0.9,
                        dashed=True,
                        tag="ne-surface",
                    )
                )
                q = box.q_low + t * (box.q_high - box.q_low)
                a = _marginal_position(box.p_low, q, projection, place)
                b = _marginal_position(box.p_high, q, projection, place)
                scene.add(
                    Line(
                        x1=a[0], y1=a[1], x2=b[0], y2=b[1],
                        color=BLUE,
                        width=style.stroke_width_pt * 0.9,
                        dashed=True,
                        tag="ne-surface",
                    )
                )

    for i, j in TETRA_EDGES:
        if (i, j) not in hidden:
            scene.add(
                Line(
                    x1=corners[i][0], y1=corners[i][1],
                    x2=corners[j][0], y2=corners[j][1],
                    color=BLACK,
                    width=style.stroke_width_pt,
                    tag="tetra-edge",
                )
            )

    if style.show_axes_labels:
        center_x = sum(c[0] for c in corners) / 4.0
        center_y = sum(c[1] for c in corners) / 4.0
        for label, (x, y) in zip(("AA", "AB", "BA", "BB"), corners):
            dx, dy = x - center_x, y - center_y
            norm = math.hypot(dx, dy) or 1.0
            scene.add(
                Text(
                    x=x + 0.07 * s * dx / norm,
                    y=y + 0.07 * s * dy / norm,
                    content=label,
                    size=0.07 * s,
                    color=BLACK,
                    anchor="center",
                    tag="corner-label",
                )
            )
    return scene


def _build_polytope(game: Game, style: StyleOptions) -> Scene:
    return scene_from_polytope(build_polytope_scene(game, style), style)


# --- embedding -----------------------------------------------------------------------


_QUADRANT_PREFS = ((0, 0), (1, 0), (1, 1), (0, 1))


def _cell_class_name(xq: int, yq: int) -> str:
    f1, f2 = _QUADRANT_PREFS[xq]
    f3, f4 = _QUADRANT_PREFS[yq]
    return class_from_br_graph(BRGraph(f1, f2, f3, f4)).name


def _build_embedding(data: EmbeddingFigureData, style: StyleOptions) -> Scene:
    s = style.size_pt
    margin = 0.14 * s
    plot = s - margin - 0.06 * s
    scene = Scene(width=s, height=s)

    def at(ax: float, ay: float) -> tuple[float, float]:
        return (margin + ax / 360.0 * plot, margin + ay / 360.0 * plot)

    if data.heatmap is not None:
        rows = data.heatmap
        values = [v for row in rows for v in row]
        low, high = min(values), max(values)
        n_rows, n_cols = len(rows), len(rows[0])
        cw, ch = plot / n_cols, plot / n_rows
        for r, row in enumerate(rows):
            for c, value in enumerate(row):
                t = 0.5 if high == low else (value - low) / (high - low)
                scene.add(
                    Rect(
                        x=margin + c * cw,
                        y=margin + plot - (r + 1) * ch,  # first matrix row on top
                        w=cw,
                        h=ch,
                        fill=lerp_color(WHITE, PURPLE, t),
                        tag="heatmap-cell",
                    )
                )

    for angle in (90.0, 180.0, 270.0):
        x0, y0 = at(angle, 0.0)
        x1, y1 = at(angle, 360.0)
        scene.add(
            Line(x1=x0, y1=y0, x2=x1, y2=y1, color=LIGHT_GRAY,
                 width=style.stroke_width_pt * 0.6, tag="grid"),
            Line(x1=at(0.0, angle)[0], y1=at(0.0, angle)[1],
                 x2=at(360.0, angle)[0], y2=at(360.0, angle)[1],
                 color=LIGHT_GRAY, width=style.stroke_width_pt * 0.6, tag="grid"),
        )
    scene.add(
        Rect(x=margin, y=margin, w=plot, h=plot, fill=None, stroke=BLACK,
             width=style.stroke_width_pt, tag="frame")
    )

    tick_len = 0.015 * s
    for angle in (0.0, 90.0, 180.0, 270.0, 360.0):
        x, _ = at(angle, 0.0)
        scene.add(Line(x1=x, y1=margin, x2=x, y2=margin - tick_len,
                       color=BLACK, width=style.stroke_width_pt * 0.8, tag="tick"))
        _, y = at(0.0, angle)
        scene.add(Line(x1=margin, y1=y, x2=margin - tick_len, y2=y,
                       color=BLACK, width=style.stroke_width_pt * 0.8, tag="tick"))
        if style.show_tick_labels:
            label = str(int(angle))
            scene.add(
                Text(x=x, y=margin - tick_len - 0.01 * s, content=label,
                     size=0.05 * s, color=BLACK, anchor="north", tag="tick-label"),
                Text(x=margin - tick_len - 0.01 * s, y=y, content=label,
                     size=0.05 * s, color=BLACK, anchor="east", tag="tick-label"),
            )

    if style.show_axes_labels:
        scene.add(
            Text(x=margin + plot / 2.0, y=margin - 0.08 * s, content="row angle (deg)",
                 size=0.055 * s, color=BLACK, anchor="north", tag="axis-label"),
            Text(x=margin + plot / 2.0, y=margin + plot + 0.015 * s,
                 content="column angle (deg)", size=0.055 * s, color=BLACK,
                 anchor="south", tag="axis-label"),
        )

    if style.show_best_response_names:
        for xq in range(4):
            for yq in range(4):
                x, y = at(45.0 + 90.0 * xq, 45.0 + 90.0 * yq)
                scene.add(
                    Text(x=x, y=y, content=_cell_class_name(xq, yq),
                         size=0.038 * s, color=GRAY, anchor="center", tag="class-name")
                )

    for ax, ay in data.points:
        x, y = at(ax % 360.0, ay % 360.0)
        scene.add(Circle(cx=x, cy=y, r=0.016 * s, fill=BLUE, tag="embed-point"))
    return scene


# --- dispatch ------------------------------------------------------------------------

_BUILDERS = {
    FigureKind.ORD_GRAPH: (_build_ord_graph, Game),
    FigureKind.BR_GRAPH: (_build_br_graph, Game),
    FigureKind.PAYOFF_TABLE: (_build_payoff_table, Game),
    FigureKind.JOINT: (_build_joint, JointDistribution),
    FigureKind.ROW_COND: (
        lambda dist, style: _build_conditional(dist, style, Player.ROW),
        JointDistribution,
    ),
    FigureKind.COL_COND: (
        lambda dist, style: _build_conditional(dist, style, Player.COL),
        JointDistribution,
    ),
    FigureKind.MARGINAL: (_build_marginal, JointDistribution),
    FigureKind.JOINT_MARGINAL: (_build_joint_marginal, JointDistribution),
    FigureKind.POLYTOPE: (_build_polytope, Game),
    FigureKind.EMBEDDING: (_build_embedding, EmbeddingFigureData),
}

FORMATS = ("tikz", "svg")


def build_scene(spec: FigureSpec) -> Scene:
    try:
        builder, payload_type = _BUILDERS[spec.kind]
    except KeyError:
        raise UnsupportedFigureError(f"unknown figure kind {spec.kind!r}") from None
    if not isinstance(spec.payload, payload_type):
        raise TypeError(
            f"figure kind {spec.kind.value!r} needs a {payload_type.__name__} payload, "
            f"got {type(spec.payload).__name__}"
        )
    return builder(spec.payload, spec.style)


def render_figure(spec: FigureSpec, format: str) -> str:
    """Serialize one figure; deterministic, byte-identical for identical inputs."""
    from .canvas import to_svg, to_tikz

    if format not in FORMATS:
        raise UnsupportedFigureError(
            f"unsupported format {format!r} for kind {spec.kind.value!r}"
        )
    scene = build_scene(spec)
    return to_tikz(scene) if format == "tikz" else to_svg(scene)


def render_polytope(game: Game, style: StyleOptions = StyleOptions(), format: str = "svg") -> str:
    return render_figure(FigureSpec(FigureKind.POLYTOPE, game, style), format)


def render_embedding(
    points,
    heatmap=None,
    style: StyleOptions = StyleOptions(),
    format: str = "svg",
) -> str:
    """Render embedding points (trivial players are skipped) over an optional heatmap.

    `points` may mix EmbeddingPoint objects and raw (row angle, column angle)
    pairs in degrees.
    """
    if heatmap is not None:
        rows = tuple(tuple(float(v) for v in row) for row in heatmap)
        if not rows or not rows[0] or any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("heatmap matrix must be rectangular and nonempty")
        heatmap = rows
    pairs: list[tuple[float, float]] = []
    for point in points:
        if isinstance(point, EmbeddingPoint):
            ra, ca = point.row_angle_degrees, point.col_angle_degrees
            if ra is None or ca is None:
                continue  # trivial player: no angle to plot
            pairs.append((ra, ca))
        else:
            a, b = point
            pairs.append((float(a), float(b)))
    data = EmbeddingFigureData(points=tuple(pairs), heatmap=heatmap)
    return render_figure(FigureSpec(FigureKind.EMBEDDING, data, style), format)
