"""Compiled kernels against their uncompiled source and the numpy fallback."""
import os
import subprocess
import sys

import numpy as np
import pytest

from jrainbow import kernels
from jrainbow._accel import USE_NUMBA
from jrainbow.graph import CompleteGraph, CycleGraph, PathGraph, WheelGraph
from jrainbow.solver import Mode, constrained_mask, search_order

from .corpus import fig1, random_graphs

SMALL = [CycleGraph(6).generate(), CycleGraph(7).generate(), PathGraph(5).generate(),
         WheelGraph(6).generate(), CompleteGraph(4).generate(), fig1()] + random_graphs(25, seed=7, max_n=6)


def _args(g, mode):
    indptr, indices = g.csr
    return indptr, indices, constrained_mask(g, mode)


@pytest.mark.parametrize("mode", list(Mode))
def test_search_compiled_matches_python(mode):
    for g in SMALL:
        indptr, indices, mask = _args(g, mode)
        order = search_order(g)
        for k in range(1, g.n + 1):
            a = kernels.search_kernel(g.n, k, order, indptr, indices, mask)
            b = kernels.search_kernel.py_func(g.n, k, order, indptr, indices, mask)
            assert a[0] == b[0]
            np.testing.assert_array_equal(a[1], b[1])


@pytest.mark.parametrize("mode", list(Mode))
def test_enumeration_paths_agree(mode):
    for g in SMALL[:8]:
        indptr, indices, mask = _args(g, mode)
        for k in range(1, min(g.n, 4) + 1):
            total = k ** g.n
            compiled = kernels.enumerate_kernel(g.n, k, indptr, indices, mask, 0, total)
            vectorised = kernels.enumerate_numpy(g.n, k, indptr, indices, mask, 0, total, chunk=97)
            assert compiled == vectorised
            if total <= 5000:
                assert kernels.enumerate_kernel.py_func(g.n, k, indptr, indices, mask, 0, total) == compiled


def test_enumeration_window():
    g = CycleGraph(6).generate()
    indptr, indices, mask = _args(g, Mode.J)
    first = kernels.enumerate_kernel(6, 3, indptr, indices, mask, 0, 3 ** 6)
    assert list(kernels.decode_assignment(first, 6, 3)) == [1, 2, 3, 1, 2, 3]
    # starting past the first hit finds the next one
    nxt = kernels.enumerate_kernel(6, 3, indptr, indices, mask, first + 1, 3 ** 6)
    assert nxt > first
    assert kernels.enumerate_numpy(6, 3, indptr, indices, mask, first + 1, 3 ** 6) == nxt


def test_decode_assignment_lexicographic():
    assert list(kernels.decode_assignment(0, 3, 2)) == [1, 1, 1]
    assert list(kernels.decode_assignment(1, 3, 2)) == [1, 1, 2]
    assert list(kernels.decode_assignment(7, 3, 2)) == [2, 2, 2]


@pytest.mark.skipif(not USE_NUMBA, reason="already running the fallback")
def test_fallback_flag_end_to_end():
    code = (
        "from jrainbow._accel import USE_NUMBA\n"
        "from jrainbow import j_number, brute_force, WheelGraph, CycleGraph, Mode\n"
        "assert not USE_NUMBA\n"
        "print(j_number(WheelGraph(6).generate()).certificate.colors)\n"
        "print(brute_force(CycleGraph(6).generate(), 3, Mode.J).colors)\n"
    )
    env = dict(os.environ, JRAINBOW_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    lines = out.stdout.splitlines()
    assert lines[0] == "(2, 3, 4, 2, 3, 4, 1)"
    assert lines[1] == "(1, 2, 3, 1, 2, 3)"
