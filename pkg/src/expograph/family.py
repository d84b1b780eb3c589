"""The parametrized basic family of root-finding iterations.

B_{m,alpha}(z) = z - alpha * p(z) * D_{m-2}(z) / D_{m-1}(z), where the
D_m satisfy a determinant recurrence driven by p and its derivatives.
m=2 is Newton's iteration, m=3 Halley's.  The basic sequence evaluates
every member at one fixed seed.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteInput, NonFiniteResult, SingularDenominator
from .poly import Polynomial, eval_with_derivs

# |D| window bounds that trigger a rescale of the whole sequence.
_RESCALE_HI = 1e100
_RESCALE_LO = 1e-100

CLASSIFY_EPS = 1e-9


@dataclass(frozen=True)
class FamilyParams:
    """Member order m >= 2 and damping alpha with |1 - alpha| < 1."""

    m: int
    alpha: complex = 1.0

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"family order m must be >= 2, got {self.m}")
        a = complex(self.alpha)
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise NonFiniteInput("alpha must be finite")
        if abs(1 - a) >= 1:
            raise ValueError(
                f"|1 - alpha| must be < 1 to keep roots attractive, got {abs(1 - a):.6g}"
            )
        object.__setattr__(self, "alpha", a)


@dataclass
class DSequence:
    """D_0 .. D_{m_max} under a shared rescaling.

    Stored values are the true D_m divided by exp(scale_log); adjacent
    ratios are unaffected, which is all the iteration consumes.
    """

    values: np.ndarray
    scale_log: float = 0.0


class FixedPointKind(enum.Enum):
    ATTRACTIVE = "attractive"
    REPULSIVE = "repulsive"
    INDIFFERENT = "indifferent"


def d_sequence(p: Polynomial, z: complex, m_max: int) -> DSequence:
    """Run the determinant recurrence up to D_{m_max}.

    The inner sum stops at min(degree, m): later terms vanish through
    either D_{m-i} = 0 or p^(i) = 0.
    """
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    if p.degree < 1:
        raise ValueError("polynomial must be non-constant")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteInput(f"z is not finite: {z!r}")

    n = p.degree
    derivs = eval_with_derivs(p, z, min(n, m_max))
    pz = derivs[0]
    # term[i] = (-1)^(i-1) p^(i-1) p^(i)/i!  (the D_{m-i} multiplier)
    terms = [0j]
    pw, fact, sign = 1.0 + 0j, 1.0, 1.0
    for i in range(1, min(n, m_max) + 1):
        fact *= i
        terms.append(sign * pw * derivs[i] / fact)
        pw *= pz
        sign = -sign

    values = np.zeros(m_max + 1, dtype=np.complex128)
    values[0] = 1.0
    scale_log = 0.0
    for m in range(1, m_max + 1):
        s = 0j
        for i in range(1, min(n, m) + 1):
            s += terms[i] * values[m - i]
        values[m] = s
        window = values[max(0, m - n + 1): m + 1]
        peak = np.max(np.abs(window))
        if peak > 0 and (peak > _RESCALE_HI or peak < _RESCALE_LO):
            values[: m + 1] /= peak
            scale_log += math.log(peak)
    return DSequence(values, scale_log)


def basic_family_step(p: Polynomial, z: complex, params: FamilyParams) -> complex:
    ds = d_sequence(p, z, params.m - 1)
    denom = ds.values[params.m - 1]
    if denom == 0:
        raise SingularDenominator(f"D_{params.m - 1}({z!r}) = 0")
    out = complex(z - params.alpha * p(z) * ds.values[params.m - 2] / denom)
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise NonFiniteResult(f"iteration overflowed at z = {z!r}")
    return out


def newton_step(p: Polynomial, z: complex) -> complex:
    pz, dp = eval_with_derivs(p, z, 1)
    if dp == 0:
        raise SingularDenominator(f"p'({z!r}) = 0")
    return complex(z - pz / dp)


def halley_step(p: Polynomial, z: complex) -> complex:
    pz, dp, ddp = eval_with_derivs(p, z, 2)
    denom = 2 * dp * dp - pz * ddp
    if denom == 0:
        raise SingularDenominator(f"Halley denominator vanishes at {z!r}")
    return complex(z - 2 * pz * dp / denom)


@dataclass
class BasicSequence:
    """Members B_2(w) .. B_{m_max}(w); values[j] holds B_{j+2}(w).

    Entries with a vanishing denominator are NaN with defined[j] False.
    """

    values: np.ndarray
    defined: np.ndarray

    def entry(self, m: int) -> complex:
        return complex(self.values[m - 2])


def basic_sequence(p: Polynomial, w: complex, m_max: int) -> BasicSequence:
    """Evaluate the whole basic sequence at one seed from a single D pass."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    ds = d_sequence(p, w, m_max - 1)
    pw = p(complex(w))
    values = np.full(m_max - 1, complex("nan"), dtype=np.complex128)
    defined = np.zeros(m_max - 1, dtype=bool)
    for m in range(2, m_max + 1):
        denom = ds.values[m - 1]
        if denom == 0:
            continue
        b = w - pw * ds.values[m - 2] / denom
        if cmath.isfinite(b):
            values[m - 2] = b
            defined[m - 2] = True
    return BasicSequence(values, defined)


def classify_fixed_point(map_derivative_modulus: float) -> FixedPointKind:
    mod = float(map_derivative_modulus)
    if not math.isfinite(mod):
        raise NonFiniteInput("derivative modulus must be finite")
    if mod < 1 - CLASSIFY_EPS:
        return FixedPointKind.ATTRACTIVE
    if mod > 1 + CLASSIFY_EPS:
        return FixedPointKind.REPULSIVE
    return FixedPointKind.INDIFFERENT
