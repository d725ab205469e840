"""Speeds of non-elliptic semigroups of holomorphic self-maps of the unit disc."""

import json

from . import _hypspeed
from ._hypspeed import (
    UnsupportedError,
    ValidationError,
    cayley,
    cayley_inv,
    experiment_names,
    k_half,
    omega,
    suite_names,
)

__all__ = [
    "UnsupportedError",
    "ValidationError",
    "build_comb",
    "cayley",
    "cayley_inv",
    "delta",
    "experiment",
    "experiment_names",
    "fit",
    "k_domain",
    "k_half",
    "omega",
    "plot_svg",
    "run_suite",
    "speeds",
    "suite_names",
]


def _domain(domain):
    return domain if isinstance(domain, str) else json.dumps(domain)


def delta(domain, p):
    return _hypspeed.delta(_domain(domain), complex(p))


def k_domain(domain, w1, w2):
    return _hypspeed.k_domain(_domain(domain), complex(w1), complex(w2))


def speeds(domain, t_min=1.0, t_max=1e8, points=512):
    """List of {t, v, v_o, v_T, log_rho, theta} rows for the orbit of 0."""
    return json.loads(_hypspeed.speeds_json(_domain(domain), t_min, t_max, points))


def fit(domain, series="v", basis="log_t", window=(1e6, 1e8), t_min=1.0, t_max=1e8, points=512):
    return json.loads(
        _hypspeed.fit_json(_domain(domain), series, basis, window[0], window[1], t_min, t_max, points)
    )


def build_comb(g="log1p", J=10, exponent=0.5, a=()):
    """Construction plus per-tooth ratios; g is log1p, sqrt or pow (with exponent)."""
    return json.loads(_hypspeed.comb_json(g, exponent, list(a), J))


def run_suite(name, samples=0, seed=42, tol=1e-9):
    return json.loads(_hypspeed.run_suite_json(name, samples, seed, tol))


def experiment(name):
    return json.loads(_hypspeed.experiment_json(name))


def plot_svg(domain, columns=("v", "v_o", "v_T"), t_min=1.0, t_max=1e8, points=512):
    return _hypspeed.svg(_domain(domain), list(columns), t_min, t_max, points)
