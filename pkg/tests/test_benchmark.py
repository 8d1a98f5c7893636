import importlib.util
from pathlib import Path

from catalania import _kernels

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_runs():
    spec = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    row = mod.bench(4, 1)
    assert row["classes"] == 14
    assert ("speedup" in row) == _kernels.HAVE_NUMBA
