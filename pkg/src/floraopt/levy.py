"""Heavy-tailed Levy-flight step sampling via the Mantegna transform.

A step component is generated as s = U / |V|^(1/lambda) with U ~ N(0, sigma^2)
and V ~ N(0, 1). For large |s| the resulting distribution has a power-law
tail ~ s^-(1+lambda), which is what gives Levy flights their occasional very
long jumps (Mantegna 1994).

The Gaussian scale sigma is a closed-form constant of lambda:

    B = Gamma(1+lambda) * sin(pi*lambda/2)
        / (Gamma((1+lambda)/2) * lambda * 2^((lambda-1)/2))

In the standard Mantegna formulation B^(1/lambda) is the standard deviation
of U (interpretation "stdev", the default). The alternative reading treats
B^(1/lambda) as the variance, so the scale becomes its square root
(interpretation "variance"). Both coincide at lambda = 1, where the constant
is exactly 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

INTERPRETATIONS = ("stdev", "variance")

# Smallest |V| accepted by the transform; smaller draws are redone so the
# ratio U/|V|^(1/lambda) stays finite.
_V_FLOOR = 1e-300

# Lanczos approximation, g = 7, 9 terms. Relative error well below 1e-12
# over the range of arguments the sampler produces.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(x: float) -> float:
    """Gamma function for positive arguments (embedded Lanczos series).

    Args:
        x: Argument, must be > 0.

    Returns:
        Gamma(x), accurate to better than 1e-10 relative on [0.1, 10].

    Raises:
        ValueError: if x <= 0.
    """
    if not x > 0.0:
        raise ValueError(f"gamma_fn requires x > 0, got {x}")
    if x < 0.5:
        # Reflection keeps the series argument in its accurate range.
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[i] / (z + i)
    base = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * base ** (z + 0.5) * math.exp(-base) * acc


def mantegna_sigma(exponent: float, interpretation: str = "stdev") -> float:
    """Gaussian scale for the numerator draw of the Mantegna transform.

    Args:
        exponent: Tail exponent lambda, in (0, 2].
        interpretation: "stdev" treats the closed-form constant B^(1/lambda)
            as the standard deviation of U (standard Mantegna, default);
            "variance" treats it as the variance, returning its square root.

    Raises:
        ValueError: for exponents outside (0, 2] or unknown interpretations.
    """
    if not 0.0 < exponent <= 2.0:
        raise ValueError(f"levy exponent must be in (0, 2], got {exponent}")
    if interpretation not in INTERPRETATIONS:
        raise ValueError(
            f"unknown interpretation {interpretation!r}, expected one of {INTERPRETATIONS}"
        )
    bracket = (
        gamma_fn(1.0 + exponent)
        * math.sin(math.pi * exponent / 2.0)
        / (gamma_fn((1.0 + exponent) / 2.0) * exponent * 2.0 ** ((exponent - 1.0) / 2.0))
    )
    scale = bracket ** (1.0 / exponent)
    if interpretation == "variance":
        scale = math.sqrt(scale)
    return scale


@dataclass(frozen=True)
class LevyConfig:
    """Parameters of the Levy step sampler.

    sigma is derived from (exponent, interpretation) on construction and is
    never set directly.
    """

    exponent: float = 1.5
    interpretation: str = "stdev"
    sigma: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "sigma", mantegna_sigma(self.exponent, self.interpretation)
        )


def levy_step(config: LevyConfig, d: int, rng: np.random.Generator) -> np.ndarray:
    """Draw a d-dimensional Levy step vector.

    Each component uses an independent (U, V) pair: U = sigma * z with
    z ~ N(0,1), V ~ N(0,1), and s = U / |V|^(1/lambda). Components of V with
    |V| below 1e-300 are redrawn, so every step is finite. The output is a
    deterministic function of the generator state.

    Args:
        config: Sampler parameters.
        d: Dimension, >= 1.
        rng: Caller-owned numpy Generator. Not safe to share across threads.

    Returns:
        Array of d finite step sizes.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    u = config.sigma * rng.standard_normal(d)
    v = rng.standard_normal(d)
    small = np.abs(v) < _V_FLOOR
    while np.any(small):
        v[small] = rng.standard_normal(int(small.sum()))
        small = np.abs(v) < _V_FLOOR
    return u / np.abs(v) ** (1.0 / config.exponent)
