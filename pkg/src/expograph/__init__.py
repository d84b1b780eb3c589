"""Polynomiography of exponential partial sums: library, CLI, and service."""

from .errors import (NoConvergence, NonFiniteInput, NonFiniteResult,
                     SceneConstraintError, SceneFormatError, SingularDenominator)
from .family import (BasicSequence, DSequence, FamilyParams, FixedPointKind,
                     basic_family_step, basic_sequence, classify_fixed_point,
                     d_sequence, halley_step, newton_step)
from .imageio import ImageBuffer, read_png, write_png, write_ppm
from .orbit import OrbitTrace, trace_orbit
from .poly import (MAX_DEGREE, Polynomial, eval_with_derivs, multiply,
                   partial_sum, szego_sum, unity_factor)
from .presets import FIGURES, figure_scene
from .render import (CONVERGED, DIVERGED, MAXITER, SINGULAR, BasinsMode,
                     ExplicitSpec, OutcomeGrid, PartialSumSpec, Scene, SzegoSpec,
                     SzegoUnitySpec, Viewport, VoronoiMode, colorize,
                     pixel_to_complex, render_basins, render_scene, render_voronoi)
from .roots import (RootClaimsReport, RootSet, cauchy_bound, find_all_roots,
                    nearest_root, verify_root_claims)
from .scenefile import load_scene, loads_scene, scene_from_dict, scene_to_dict

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
