"""Deterministic TikZ and SVG figure generation for every visualization family."""

from .canvas import Scene, to_svg, to_tikz
from .figures import (
    EmbeddingFigureData,
    FigureKind,
    FigureSpec,
    PolytopeScene,
    UnsupportedFigureError,
    build_polytope_scene,
    build_scene,
    render_embedding,
    render_figure,
    render_polytope,
    scene_from_polytope,
)
from .files import load_matrix, load_points, save_matrix, save_points
from .style import StyleOptions
