import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rainbow3 import kernels  # noqa: E402


@pytest.fixture(params=kernels.available())
def backend(request):
    with kernels.backend(request.param):
        yield request.param
