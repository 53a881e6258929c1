"""Exact spherical convexity on gauge spheres.

Rationals are returned as ``fractions.Fraction``. Inputs may be ints,
Fractions or ``"p/q"`` strings.
"""

import json
from fractions import Fraction

from . import _core

SconvError = _core.SconvError

__all__ = [
    "SconvError",
    "commands",
    "run",
    "hull_addible",
    "radon_partition",
    "separating_hemisphere",
    "evaluate",
]


def _rat(x):
    return str(Fraction(x))


def _rays(rays):
    return [[_rat(c) for c in r] for r in rays]


def _frac(v):
    return [Fraction(s) for s in v]


def commands():
    return list(_core.commands())


def run(command, instance, *, float_digits=12, seed=0, samples=1000, closed=False, suite="", replay=False):
    """Runs a CLI subcommand in process. Returns (document, exit_code)."""
    text, code = _core.run_command(
        command, json.dumps(instance), float_digits, seed, samples, closed, suite, replay
    )
    return json.loads(text), code


def hull_addible(rays):
    d = _core.hull_addible(_rays(rays))
    out = {"hull_addible": d["hull_addible"]}
    if "u" in d:
        out["u"] = _frac(d["u"])
    if "lambda" in d:
        out["lambda"] = _frac(d["lambda"])
    return out


def radon_partition(rays):
    d = _core.radon_partition(_rays(rays))
    return {"part1": list(d["part1"]), "part2": list(d["part2"]), "witness": _frac(d["witness"])}


def separating_hemisphere(rays, closed=False):
    d = _core.separating_hemisphere(_rays(rays), closed)
    return {"u": _frac(d["u"]), "alpha": Fraction(d["alpha"])}


def evaluate(kind, x, p=2.0):
    return _core.evaluate(kind, [float(c) for c in x], float(p))
