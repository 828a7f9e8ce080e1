import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from gpcheck import _kernels, kernels
from gpcheck.cyclic import _kernel_tables, enumerate_Dp
from gpcheck.generate import random_pair, random_virtual_string
from gpcheck.surface import build_ribbon

compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@compiled
@given(st.integers(0, 10 ** 6))
def test_boundary_count_backends_agree(seed):
    from gpcheck import _ckernels

    rg = build_ribbon(random_virtual_string(random.Random(seed), 10, 4))
    assert _ckernels.boundary_count(rg.opp) == _kernels.boundary_count(rg.opp) == len(rg.boundary_cycles())


@compiled
@given(st.integers(0, 10 ** 6))
def test_vii_scan_backends_agree(seed):
    from gpcheck import _ckernels

    p, P_, _ = random_pair(random.Random(seed), max_arrows=8, max_circles=4, need=())
    T = _kernel_tables(p, P_, enumerate_Dp(p))
    assert _ckernels.vii_scan(T) == _kernels.vii_scan(T)


def test_pure_python_switch():
    code = "from gpcheck import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, GPCHECK_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_wide_alphabet_uses_fallback():
    # more than 64 letters cannot be packed into one machine word
    from gpcheck.gauss import GaussParagraph
    from gpcheck.partition import WordWisePartition

    letters = [f"x{k}" for k in range(70)]
    p = GaussParagraph((tuple(letters), tuple(letters)))
    half = frozenset(letters[:35])
    P_ = WordWisePartition(((half, frozenset()), (frozenset(letters[35:]), frozenset())))
    fam = enumerate_Dp(p, cap=20)
    T = _kernel_tables(p, P_, fam)
    assert T.nbits == 70
    assert kernels.vii_scan(T) == _kernels.vii_scan(T)
