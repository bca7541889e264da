"""The compiled kernels and their pure-Python twins must agree bit for bit."""

import os
import random
import subprocess
import sys

import pytest

from mobilehook import _pykernels, corpus, kernels

compiled = pytest.importorskip("mobilehook._kernels")


def cases():
    rng = random.Random(5)
    return [corpus.random_poset(rng, n, density=rng.choice([0.1, 0.3, 0.6]))
            for n in range(1, 10) for _ in range(6)]


@pytest.mark.parametrize("P", cases(), ids=lambda p: f"n{p.n}")
def test_extension_histograms_agree(P):
    args = (P.below_masks(), list(P.labels))
    for last in [-1] + list(range(P.n)):
        assert compiled.extension_histograms(*args, last) == _pykernels.extension_histograms(*args, last)


@pytest.mark.parametrize("P", [p for p in cases() if p.n <= 6], ids=lambda p: f"n{p.n}")
def test_ppartition_counts_agree(P):
    order = list(reversed(P.topological_order()))
    up = P.upper_covers()
    for s in [-1] + list(range(P.n)):
        a = compiled.ppartition_counts(order, up, list(P.labels), 9, s)
        b = _pykernels.ppartition_counts(order, up, list(P.labels), 9, s)
        assert list(a) == list(b)


def test_size_limit():
    with pytest.raises(ValueError):
        compiled.extension_histograms([0] * 31, list(range(1, 32)))


def test_backend_selection_env():
    code = "import mobilehook.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, MOBILEHOOK_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env["MOBILEHOOK_PURE"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "compiled"
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_backend_reproduces_example():
    code = ("import json,mobilehook.kernels as k;"
            "from mobilehook.mobile import MobilePoset;"
            "from mobilehook.poset import count_extensions;"
            "m=MobilePoset.from_json({'lambda':[2,2,2,1],'mu':[1,1],'hangings':"
            "[{'at':[2,2],'kind':'tree','parents':[0,1,1]},{'at':[4,1],'kind':'tree','parents':[0,1,1]}]});"
            "print(k.BACKEND, count_extensions(m.to_poset()))")
    env = dict(os.environ, MOBILEHOOK_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "7056"]
