"""Quadratic Lie conformal algebras from Gel'fand-Dorfman algebras."""

import json

from . import _core
from ._core import GDAlgebra, InvalidAlgebra, InvalidContext, ParseError, TruncationOverflow

__all__ = [
    "GDAlgebra",
    "InvalidAlgebra",
    "InvalidContext",
    "ParseError",
    "TruncationOverflow",
    "abelian",
    "abelian_kernel",
    "bracket",
    "check",
    "ci_table",
    "envelope",
    "lemma2",
    "load",
    "nprod",
    "vir",
    "virasoro",
]


def load(path):
    return GDAlgebra.load(str(path))


def virasoro():
    return _core.virasoro()


def abelian():
    return _core.abelian()


def check(path):
    return json.loads(_core.check(str(path)))


def bracket(algebra, a, b):
    return json.loads(_core.bracket(algebra, a, b))


def nprod(algebra, a, b, n):
    return json.loads(_core.nprod(algebra, a, b, n))


def envelope(algebra, order_bound=3, degree_bound=3, word_bound=2, seed=1):
    return [json.loads(r) for r in _core.envelope(algebra, order_bound, degree_bound, word_bound, seed)]


def vir(s=5, q=5, l=5, backend="weyl"):
    return [json.loads(r) for r in _core.vir(s, q, l, backend)]


def abelian_kernel(order_bound=6, degree_bound=4, image_order_cap=12):
    return json.loads(_core.abelian_kernel(order_bound, degree_bound, image_order_cap))


def lemma2(order_bound=5, degree_bound=3):
    return json.loads(_core.lemma2(order_bound, degree_bound))


def ci_table(lmax=4):
    return json.loads(_core.ci_table(lmax))
