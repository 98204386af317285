import pytest

from segrecr import ffscan
from segrecr.segre import build_all


@pytest.fixture(scope="session")
def data():
    return build_all()


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # jit compilation happens once here so timed checks measure the scans
    backend = ffscan._load_backend()
    backend.warm_up()


@pytest.fixture(scope="session")
def session_cache(tmp_path_factory):
    return str(tmp_path_factory.mktemp("scan_cache"))
