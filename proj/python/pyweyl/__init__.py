"""Python bindings for the weyl library.

Automorphisms and reports are plain dicts in the same JSON shapes the
``weyl`` CLI reads and writes.
"""

import json

from . import _core
from ._core import Element, WeylError, bracket, exp_ad, sigma1, suite_names

__all__ = [
    "Algebra",
    "Element",
    "WeylError",
    "apply_aut",
    "bracket",
    "classify",
    "compose",
    "decompose",
    "exp_ad",
    "expand",
    "iso_search",
    "selftest",
    "sigma1",
    "suite_names",
    "verify",
    "witness",
]


class Algebra:
    """W(ell1, ell2, Gamma) with Gamma spanned by ``gamma_generators``.

    Generator entries may be ints or rational strings such as ``"1/2"``.
    """

    def __init__(self, ell1, ell2, gamma_generators, mode="lie", seed=1):
        config = {
            "ell1": ell1,
            "ell2": ell2,
            "gamma_generators": [[str(c) for c in row] for row in gamma_generators],
            "mode": mode,
            "seed": seed,
        }
        self._core = _core.Algebra(json.dumps(config))

    @classmethod
    def from_config(cls, config):
        self = cls.__new__(cls)
        self._core = _core.Algebra(json.dumps(config))
        return self

    def parse(self, text):
        return self._core.parse(text)

    def ast(self, text):
        return self._core.ast(text)

    def element(self, data):
        return self._core.element_from_json(json.dumps(data))

    def one(self):
        return self._core.one()

    def d(self, q, power=1):
        return self._core.d(q, power)

    @property
    def signature(self):
        return json.loads(self._core.signature_json())

    @property
    def mode(self):
        return self._core.mode


def apply_aut(aut, element):
    return _core.apply_aut(json.dumps(aut), element)


def compose(a, b):
    return json.loads(_core.compose(json.dumps(a), json.dumps(b)))


def decompose(aut):
    return json.loads(_core.decompose(json.dumps(aut)))


def expand(aut):
    return json.loads(_core.expand(json.dumps(aut)))


def verify(aut, trials=100, seed=1):
    return json.loads(_core.verify(json.dumps(aut), trials, seed))


def iso_search(src, dst, bound=2, cap=2_000_000, trials=20, seed=1):
    return json.loads(_core.iso_search(src._core, dst._core, bound, cap, trials, seed))


def classify(element, steps=5):
    return json.loads(_core.classify(element, steps))


def witness(element):
    out = _core.witness(element)
    return None if out is None else json.loads(out)


def selftest(suite, seed=1):
    """Returns (passed, report line)."""
    return _core.selftest(suite, seed)
