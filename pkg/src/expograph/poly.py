"""Dense complex polynomials and the exponential partial-sum family.

Coefficients are stored ascending: ``coeffs[k]`` multiplies ``z**k``.
Evaluation points may be python scalars or numpy arrays; everything
broadcasts.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Factorial/power coefficient magnitudes stay representable up to here.
MAX_DEGREE = 64


@dataclass(frozen=True)
class Polynomial:
    coeffs: np.ndarray = field()

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        # trim trailing zeros but keep one coefficient for the zero polynomial
        last = c.size - 1
        while last > 0 and c[last] == 0:
            last -= 1
        c = c[: last + 1].copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 1 and self.coeffs[0] == 0

    def __call__(self, z):
        """Horner evaluation; accepts scalars or arrays."""
        z = np.asarray(z, dtype=np.complex128)
        acc = np.full_like(z, self.coeffs[-1])
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        return acc[()] if acc.ndim == 0 else acc


def partial_sum(n: int) -> Polynomial:
    """Degree-n truncation of the exponential series: sum z^k / k!."""
    _check_degree(n, minimum=0)
    c = np.empty(n + 1, dtype=np.complex128)
    c[0] = 1.0
    for k in range(1, n + 1):
        c[k] = c[k - 1] / k
    return Polynomial(c)


def szego_sum(n: int) -> Polynomial:
    """Scaled partial sum P_n(n z); coefficient k is n^k / k!."""
    _check_degree(n, minimum=1)
    c = np.empty(n + 1, dtype=np.complex128)
    c[0] = 1.0
    for k in range(1, n + 1):
        c[k] = c[k - 1] * n / k
    return Polynomial(c)


def unity_factor(n: int) -> Polynomial:
    """The roots-of-unity factor z^n - 1."""
    _check_degree(n, minimum=1)
    c = np.zeros(n + 1, dtype=np.complex128)
    c[0] = -1.0
    c[n] = 1.0
    return Polynomial(c)


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero or q.is_zero:
        raise ValueError("multiply requires non-zero polynomials")
    return Polynomial(np.convolve(p.coeffs, q.coeffs))


def eval_with_derivs(p: Polynomial, z, k: int):
    """Evaluate p and its first k derivatives in one synthetic-division pass.

    Returns a list ``[p(z), p'(z), ..., p^(k)(z)]``; orders past the degree
    are exactly zero.  z may be a scalar or an array (entries are then
    arrays of the same shape).
    """
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    z = np.asarray(z, dtype=np.complex128)
    c = p.coeffs
    n = c.size - 1
    vals = [np.zeros(z.shape, dtype=np.complex128) for _ in range(k + 1)]
    vals[0] += c[n]
    for j in range(n - 1, -1, -1):
        for i in range(min(k, n - j), 0, -1):
            vals[i] = vals[i] * z + vals[i - 1]
        vals[0] = vals[0] * z + c[j]
    fact = 1.0
    for i in range(1, k + 1):
        fact *= i
        vals[i] = vals[i] * fact
    if z.ndim == 0:
        return [v[()] for v in vals]
    return vals


def _check_degree(n, minimum):
    n = int(n)
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree capped at {MAX_DEGREE}, got {n}")
