"""Compiled kernel vs pure-NumPy fallback: same pivots, same bits."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from hullprobe.lp import _backend, _simplex_py

compiled = pytest.importorskip(
    "hullprobe.lp._simplex", reason="compiled simplex extension not built"
)


def _random_instance(rng):
    d = int(rng.integers(1, 6))
    n = int(rng.integers(d + 1, 14))
    pts = rng.normal(size=(n, d))
    q = rng.normal(size=d) * rng.uniform(0.1, 1.5)
    A = np.vstack([pts.T, np.ones(n)])
    b = np.append(q, 1.0)
    return A, b


def test_backend_constants():
    assert _simplex_py.BACKEND == "python"
    assert compiled.BACKEND == "cython"
    assert _backend.BACKEND in ("python", "cython")


def test_phase1_bitwise_parity_on_random_instances():
    rng = np.random.default_rng(2718)
    for _ in range(300):
        A, b = _random_instance(rng)
        vc, xc, yc, pc = compiled.phase1(A, b, 1e-9)
        vp, xp, yp, pp = _simplex_py.phase1(A, b, 1e-9)
        assert pc == pp
        assert vc == vp  # exact float equality, not approx
        assert np.array_equal(xc, xp)
        assert np.array_equal(yc, yp)


def test_phase1_parity_on_degenerate_instances():
    rng = np.random.default_rng(99)
    for _ in range(60):
        # duplicated points and rank-deficient rows stress the tie-breaking
        d = int(rng.integers(1, 4))
        base = rng.integers(-2, 3, size=(6, d)).astype(float)
        pts = np.vstack([base, base[:2]])
        q = base[0]
        A = np.vstack([pts.T, np.ones(len(pts))])
        b = np.append(q, 1.0)
        out_c = compiled.phase1(A, b, 1e-9)
        out_p = _simplex_py.phase1(A, b, 1e-9)
        assert out_c[3] == out_p[3]
        assert out_c[0] == out_p[0]
        assert np.array_equal(out_c[1], out_p[1])
        assert np.array_equal(out_c[2], out_p[2])


def test_env_var_forces_pure_python():
    code = "from hullprobe.lp import _backend; print(_backend.BACKEND)"
    env = dict(os.environ, HULLPROBE_PURE_PYTHON="1")
    got = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert got.stdout.strip() == "python"


def test_full_pipeline_identical_across_backends():
    """point_in_hull emits byte-identical certificates under either backend."""
    code = r"""
import json
import numpy as np
from hullprobe.lp.hull import point_in_hull
from hullprobe.lp import _backend
rng = np.random.default_rng(31415)
rows = []
for _ in range(80):
    d = int(rng.integers(2, 5))
    n = int(rng.integers(d + 1, 12))
    pts = rng.normal(size=(n, d))
    q = rng.normal(size=d)
    cert = point_in_hull(pts, q)
    rows.append({
        "backend": _backend.BACKEND,
        "verdict": cert.verdict.name,
        "weights": None if cert.weights is None else cert.weights.tolist(),
        "sep": None if cert.separator is None else
            [cert.separator.normal.tolist(), cert.separator.offset],
        "infeas": cert.infeasibility,
    })
print(json.dumps(rows))
"""
    runs = {}
    for name, env_val in (("cython", None), ("python", "1")):
        env = dict(os.environ)
        env.pop("HULLPROBE_PURE_PYTHON", None)
        if env_val is not None:
            env["HULLPROBE_PURE_PYTHON"] = env_val
        got = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
        )
        runs[name] = json.loads(got.stdout)
    assert [r["backend"] for r in runs["cython"]][0] == "cython"
    assert [r["backend"] for r in runs["python"]][0] == "python"
    for rc, rp in zip(runs["cython"], runs["python"]):
        assert rc["verdict"] == rp["verdict"]
        assert rc["weights"] == rp["weights"]
        assert rc["sep"] == rp["sep"]
        assert rc["infeas"] == rp["infeas"]
