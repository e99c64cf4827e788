import pytest

from gebr import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # absorb JIT compilation so timed tests measure the operations themselves
    _kernels.warmup()
