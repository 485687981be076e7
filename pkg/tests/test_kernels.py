"""The compiled kernels and the pure-Python twin must agree bit for bit."""

import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roughring import _kernels, ring_zmod
from roughring.lawcheck import count_maps, _map_rows

PY = _kernels.get_backend("python")
try:
    C = _kernels.get_backend("cython")
except ImportError:  # extension not built
    C = None

needs_ext = pytest.mark.skipif(C is None, reason="compiled extension not built")
buf = _kernels.as_buffer


@st.composite
def map_block(draw, max_maps=6):
    nsrc = draw(st.integers(1, 3))
    ny = draw(st.integers(1, 3))
    nmaps = draw(st.integers(1, max_maps))
    flat = draw(st.lists(st.integers(0, (1 << ny) - 1), min_size=nmaps * nsrc, max_size=nmaps * nsrc))
    return flat, nmaps, nsrc, 1 << ny


@needs_ext
@settings(max_examples=150, deadline=None)
@given(map_block(), st.integers(0, 4))
def test_scan_single_agrees(block, law):
    flat, nmaps, nsrc, nsub = block
    assert PY.scan_single(buf(flat), nmaps, nsrc, nsub, law) == C.scan_single(buf(flat), nmaps, nsrc, nsub, law)


@needs_ext
@settings(max_examples=150, deadline=None)
@given(map_block(), st.integers(0, 3), st.booleans())
def test_scan_pair_agrees(block, law, meet):
    flat, nmaps, nsrc, nsub = block
    assert (PY.scan_pair(buf(flat), nmaps, nsrc, nsub, law, meet)
            == C.scan_pair(buf(flat), nmaps, nsrc, nsub, law, meet))


@needs_ext
@settings(max_examples=100, deadline=None)
@given(map_block())
def test_approx_tables_agree(block):
    flat, nmaps, nsrc, nsub = block
    assert list(PY.approx_tables(buf(flat), nmaps, nsrc, nsub)[0]) == list(C.approx_tables(buf(flat), nmaps, nsrc, nsub)[0])
    assert list(PY.approx_tables(buf(flat), nmaps, nsrc, nsub)[1]) == list(C.approx_tables(buf(flat), nmaps, nsrc, nsub)[1])


@st.composite
def magma(draw):
    """Random (mostly non-ring) tables; both kernels must report the same first violation."""
    n = draw(st.integers(1, 4))
    cells = st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n)
    return n, draw(cells), draw(cells), draw(st.integers(0, n - 1))


@needs_ext
@settings(max_examples=200, deadline=None)
@given(magma())
def test_ring_violation_agrees(case):
    n, add, mul, zero = case
    assert PY.ring_violation(buf(add), buf(mul), n, zero) == C.ring_violation(buf(add), buf(mul), n, zero)


@needs_ext
@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.data())
def test_congruence_violation_agrees(n, data):
    R = ring_zmod(n)
    blocks = data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    args = (buf(R._flat_add), buf(R._flat_mul), n, buf(blocks))
    assert PY.congruence_violation(*args) == C.congruence_violation(*args)


def test_full_scope_agreement_on_every_law():
    """Exhaustive |X|=|Y|=2 scans; cheap enough for the Python twin."""
    flat = [v for row in _map_rows(2, 2, True) for v in row]
    nmaps = count_maps(2, 2, True)
    for law in range(5):
        ref = PY.scan_single(buf(flat), nmaps, 2, 4, law)
        assert _kernels.scan_single(flat, nmaps, 2, 4, law) == ref
    for law in range(4):
        ref = PY.scan_pair(buf(flat), nmaps, 2, 4, law, True)
        assert _kernels.scan_pair(flat, nmaps, 2, 4, law, True) == ref


def test_zmod_is_a_ring_for_both_backends():
    for n in range(1, 10):
        R = ring_zmod(n)
        assert PY.ring_violation(buf(R._flat_add), buf(R._flat_mul), n, 0) is None
        if C is not None:
            assert C.ring_violation(buf(R._flat_add), buf(R._flat_mul), n, 0) is None


def test_env_var_forces_fallback():
    code = "import roughring._kernels as k; print(k.BACKEND)"
    env = dict(os.environ, ROUGHRING_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.get_backend("fortran")


@needs_ext
def test_benchmark_script_runs():
    script = Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--repeat", "1"], capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr
    assert "speedup" in out.stdout
