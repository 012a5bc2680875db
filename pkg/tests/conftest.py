from __future__ import annotations

import pytest

from interpmac import hecke
from interpmac.field import CoeffField, Specialization, draw_specialization
from interpmac.macdonald import MacdonaldFamily


@pytest.fixture(scope="session")
def sym():
    return CoeffField.symbolic_field()


@pytest.fixture(scope="session")
def spec_field():
    """A fixed guarded specialization, q = 2/11, t = 3/13."""
    return CoeffField.specialized(*_pair("2/11", "3/13"))


def _pair(q, t):
    from fractions import Fraction

    return Fraction(q), Fraction(t)


@pytest.fixture(scope="session")
def family_cache():
    cache = {}

    def get(field, n):
        key = (field.fingerprint, n)
        if key not in cache:
            cache[key] = MacdonaldFamily(field, n)
        return cache[key]

    return get


@pytest.fixture(autouse=True)
def _check_division():
    old = hecke.CHECK_DIVISION
    hecke.CHECK_DIVISION = True
    yield
    hecke.CHECK_DIVISION = old


def seeded_field(seed: int, n: int, D: int) -> CoeffField:
    sp: Specialization = draw_specialization(seed, n, D)
    return CoeffField.from_specialization(sp)
