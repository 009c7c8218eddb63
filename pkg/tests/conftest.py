from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from freqfn import StepFn, generate
from freqfn.rational import Rat

settings.register_profile(
    "det",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("det")

# Shared corpus: one representative parameterization per generator, small
# enough that the full suite stays desk-scale.
CORPUS_PARAMS = [
    ("f1", {}),
    ("f2", {}),
    ("f3", {"K": 16}),
    ("f4", {"k": 5}),
    ("f5", {"K": 12}),
    ("f7", {}),
    ("f8", {"K": 12}),
    ("f9", {"K": 8}),
    ("sparse", {"eps": Rat(1, 2), "M_max": 120}),
]


@pytest.fixture(scope="session")
def corpus():
    return [(fid, params, generate(fid, **params)) for fid, params in CORPUS_PARAMS]


def rationals(lo=-6, hi=6, max_den=12):
    return st.fractions(
        min_value=Fraction(lo), max_value=Fraction(hi), max_denominator=max_den
    ).map(Rat)


@st.composite
def step_fns(draw, max_spans=5):
    """Random canonical step functions.

    Drawn as consecutive spans over sorted endpoints with values that may
    repeat or be zero, so canonicalization (zero dropping, merging of
    abutting equal values) is exercised on nearly every example.
    """
    spans = draw(st.integers(min_value=0, max_value=max_spans))
    if spans == 0:
        return StepFn()
    endpoints = sorted(
        draw(
            st.lists(
                st.fractions(min_value=Fraction(-6), max_value=Fraction(6), max_denominator=12),
                min_size=spans + 1,
                max_size=spans + 1,
                unique=True,
            )
        )
    )
    values = draw(
        st.lists(
            st.one_of(
                st.just(Fraction(0)),
                st.fractions(min_value=Fraction(0), max_value=Fraction(4), max_denominator=8),
            ),
            min_size=spans,
            max_size=spans,
        )
    )
    return StepFn((endpoints[i], endpoints[i + 1], values[i]) for i in range(spans))
