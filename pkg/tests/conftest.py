import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lsab.algebra import Algebra
from lsab.arith import qarray, zeros
from lsab.randgen import VALUES, make_rng, random_lsa

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("lsab", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("lsab")

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def table(n, entries, kind="left-symmetric", name=""):
    c = np.array(zeros((n, n, n)))
    for (i, j, k), v in entries.items():
        c[i, j, k] = Fraction(v)
    return Algebra(qarray(c), name, kind)


def lie_table(n, brackets, name=""):
    c = np.array(zeros((n, n, n)))
    for (i, j, k), v in brackets.items():
        c[i, j, k] += Fraction(v)
        c[j, i, k] -= Fraction(v)
    return Algebra(qarray(c), name, "lie")


def F(*xs):
    return qarray([Fraction(x) for x in xs])


def mat(rows):
    return qarray([[Fraction(x) for x in r] for r in rows])


rationals = st.sampled_from(VALUES)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def raw_tables(draw, max_dim=2):
    """Arbitrary (usually not left-symmetric) tables of small dimension."""
    n = draw(st.integers(1, max_dim))
    flat = draw(st.lists(rationals, min_size=n**3, max_size=n**3))
    return Algebra(qarray(np.array(flat, dtype=object).reshape(n, n, n)), "", "left-symmetric")


@st.composite
def lsas(draw, max_dim=3):
    n = draw(st.integers(1, max_dim))
    return random_lsa(make_rng(draw(seeds)), n)


@st.composite
def vectors(draw, n):
    return qarray(draw(st.lists(rationals, min_size=n, max_size=n)))


@st.composite
def matrices(draw, n, m=None):
    m = n if m is None else m
    flat = draw(st.lists(rationals, min_size=n * m, max_size=n * m))
    return qarray(np.array(flat, dtype=object).reshape(n, m))


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR
