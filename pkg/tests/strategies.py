"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from roughring import SetValuedMap, Subset, Universe


@st.composite
def map_and_sets(draw, max_x=5, max_y=5, total=False, nsets=2):
    nx = draw(st.integers(1, max_x))
    ny = draw(st.integers(1, max_y))
    X, Y = Universe.range(nx, start=1), Universe.range(ny)
    lo = 1 if total else 0
    table = draw(st.lists(st.integers(lo, (1 << ny) - 1), min_size=nx, max_size=nx))
    sets = [Subset(Y, draw(st.integers(0, (1 << ny) - 1))) for _ in range(nsets)]
    return SetValuedMap(X, Y, table), sets


@st.composite
def map_pair(draw, max_x=5, max_y=5):
    F, (A,) = draw(map_and_sets(max_x, max_y, nsets=1))
    table = draw(st.lists(st.integers(0, F.target.full_mask), min_size=F.source.size, max_size=F.source.size))
    return F, SetValuedMap(F.source, F.target, table), A


def as_dict(F):
    """Plain ``{source index: set of target indices}`` for the oracle."""
    return {i: set(F.at(i)) for i in range(F.source.size)}
