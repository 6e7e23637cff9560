"""Seeded synthetic pairs for the twelve data-kind x truth scenarios.

Every draw comes from a generator keyed by ``(seed, scenario, trial)`` so a
scenario is reproducible regardless of generation order or concurrency.

Mixed scenarios always have X continuous and Y discrete.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .discrete import CausalModel

DATA_KINDS = ("discrete", "mixed", "continuous")
NONCYCLIC_VARIANTS = {"discrete": ("noncyclic",), "mixed": ("noncyclic",), "continuous": ("linear", "cubic")}

DISCRETE_ALPHABET = 10
CONFOUNDER_ALPHABET = 100
MAX_REJECTIONS = 10_000

MIXTURE_WEIGHTS = (0.6, 0.2, 0.2)
MIXTURE_MEANS = (-5.0, 0.0, 5.0)
MIXTURE_SDS = (2.0, 1.0, 2.0)


class ScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class ScenarioSpec:
    data_kind: str
    truth: CausalModel
    n: int
    seed: int = 0
    variant: Optional[str] = None
    trial: int = 0

    def __post_init__(self):
        object.__setattr__(self, "truth", CausalModel.parse(self.truth))
        if self.data_kind not in DATA_KINDS:
            raise ScenarioError(f"unknown data kind {self.data_kind!r}")
        if self.variant is not None:
            if self.truth is not CausalModel.XTOY or self.variant not in NONCYCLIC_VARIANTS[self.data_kind]:
                raise ScenarioError(
                    f"no scenario ({self.data_kind}, {self.truth.value}, {self.variant})"
                )
        if self.n < 1:
            raise ScenarioError(f"n must be positive, got {self.n}")
        if not 0 <= self.seed < 2**64:
            raise ScenarioError("seed must be an unsigned 64-bit integer")

    @property
    def key(self) -> str:
        return f"{self.data_kind}/{self.truth.value}/{self.variant or 'modular'}"

    def rng(self) -> np.random.Generator:
        tag = zlib.crc32(self.key.encode())
        return np.random.Generator(np.random.Philox(np.random.SeedSequence([self.seed, tag, self.trial])))


def _categorical(rng, k, n):
    p = rng.dirichlet(np.ones(k))
    return rng.choice(k, size=n, p=p)


def _random_function(rng, m_x, m_y):
    while True:
        f = rng.integers(0, m_y, size=m_x)
        if np.any(f != f[0]):
            return f


def _mixture(rng, n):
    comp = rng.choice(3, size=n, p=MIXTURE_WEIGHTS)
    return rng.normal(np.take(MIXTURE_MEANS, comp), np.take(MIXTURE_SDS, comp))


def _equal_bins(values, m):
    """Index of each value among ``m`` equal-width intervals spanning its range."""
    low, high = values.min(), values.max()
    if high == low:
        return np.zeros(values.size, dtype=np.int64)
    return np.minimum(((values - low) / (high - low) * m).astype(np.int64), m - 1)


def _discrete(spec, rng):
    n, k = spec.n, DISCRETE_ALPHABET
    truth = spec.truth
    if truth is CausalModel.INDEPENDENT:
        return _categorical(rng, k, n), _categorical(rng, k, n)
    if truth is CausalModel.CONFOUNDED:
        c = _categorical(rng, CONFOUNDER_ALPHABET, n)
        return c // 10, c % 10
    cause = _categorical(rng, k, n)
    noise = _categorical(rng, k, n)
    f = _random_function(rng, k, k)
    effect = (f[cause] + noise) % k
    return (cause, effect) if truth is CausalModel.XTOY else (effect, cause)


def _mixed(spec, rng):
    n, truth = spec.n, spec.truth
    if truth is CausalModel.INDEPENDENT:
        return rng.normal(size=n), _categorical(rng, DISCRETE_ALPHABET, n)
    if truth is CausalModel.CONFOUNDED:
        c = _categorical(rng, CONFOUNDER_ALPHABET, n)
        b = rng.uniform(2.0, 4.0)
        return b * np.sin(c) + rng.normal(0.0, 0.1, size=n), c // 10
    if truth is CausalModel.XTOY:
        for _ in range(MAX_REJECTIONS):
            x = _mixture(rng, n)
            m_x = int(rng.integers(2, 5))
            f = rng.integers(0, 11, size=m_x)
            y = (f[_equal_bins(x, m_x)] + rng.integers(-1, 2, size=n)) % 10
            if np.std(y) > 0 and np.corrcoef(x, y)[0, 1] > 0.2:
                return x, y
        raise ScenarioError("correlation constraint not met within the retry budget")
    m_y = int(rng.integers(2, 9))
    y = _categorical(rng, m_y, n)
    x = (2 * y + 3 * np.sin(y) + rng.normal(size=n)) % 20
    return x, y


def _continuous(spec, rng):
    n, truth = spec.n, spec.truth
    if truth is CausalModel.INDEPENDENT:
        return rng.normal(size=n), rng.normal(size=n)
    if truth is CausalModel.CONFOUNDED:
        e = rng.uniform(0.5, 0.9)
        a = int(rng.integers(1, 4))
        eta = rng.uniform(np.pi / 4, np.pi / 3)
        phi = rng.uniform(0.0, 2 * np.pi, size=n)
        r = a * (1 - e**2) / (1 + e * np.cos(phi))
        x = r * np.cos(phi + eta) + rng.normal(0.0, 0.1 * a, size=n)
        y = r * np.sin(phi + eta) + rng.normal(0.0, 0.1 * a, size=n)
        return x, y
    cause = _mixture(rng, n)
    m = int(rng.integers(2, 5))
    a = rng.uniform(4.0, 7.0)
    b = rng.uniform(1.0, 5.0)
    effect = (a * _equal_bins(cause, m) + b + rng.normal(size=n)) % 20
    return (cause, effect) if truth is CausalModel.XTOY else (effect, cause)


def _signed_uniform(rng):
    """Draw from U([-2, -0.5] u [0.5, 2])."""
    return rng.choice((-1.0, 1.0)) * rng.uniform(0.5, 2.0)


def non_cyclic_direct(spec: ScenarioSpec):
    """Directed pairs whose additive noise is not wrapped around a modulus."""
    if spec.truth is not CausalModel.XTOY or spec.variant not in NONCYCLIC_VARIANTS[spec.data_kind]:
        raise ScenarioError(f"not a non-cyclic direct scenario: {spec.key}")
    rng = spec.rng()
    n = spec.n
    if spec.data_kind == "discrete":
        k = DISCRETE_ALPHABET
        x = _categorical(rng, k, n)
        f = _random_function(rng, k, k)
        return x, f[x] + _categorical(rng, k, n)
    if spec.data_kind == "mixed":
        x = rng.normal(0.0, 10.0, size=n)
        m_x = int(rng.integers(2, 5))
        f = _random_function(rng, m_x, 24) + 1
        return x, f[_equal_bins(x, m_x)] + rng.integers(-1, 2, size=n)
    x = _mixture(rng, n)
    a, b = _signed_uniform(rng), _signed_uniform(rng)
    fx = x if spec.variant == "linear" else x**3
    return x, a * fx + b * np.sin(2 * np.pi * x) + rng.normal(size=n)


def generate(spec: ScenarioSpec):
    """Draw one paired sample ``(x, y)`` for the scenario."""
    if spec.variant is not None:
        return non_cyclic_direct(spec)
    rng = spec.rng()
    if spec.data_kind == "discrete":
        return _discrete(spec, rng)
    if spec.data_kind == "mixed":
        return _mixed(spec, rng)
    return _continuous(spec, rng)


def column_types(data_kind: str) -> tuple[str, str]:
    return {
        "discrete": ("discrete", "discrete"),
        "mixed": ("continuous", "discrete"),
        "continuous": ("continuous", "continuous"),
    }[data_kind]


def modular_scenarios():
    """All twelve (data kind, true model) cells of the wrapped-noise generators."""
    return [(kind, truth) for kind in DATA_KINDS for truth in CausalModel]


def direct_confounded_scenarios():
    """Direct (non-cyclic) and confounded scenarios compared at n = 500."""
    direct = [("discrete", "noncyclic"), ("mixed", "noncyclic"), ("continuous", "linear"), ("continuous", "cubic")]
    out = [(kind, CausalModel.XTOY, variant) for kind, variant in direct]
    out += [(kind, CausalModel.CONFOUNDED, None) for kind in DATA_KINDS]
    return out
