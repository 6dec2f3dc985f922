import pytest

from turanlab import kernels


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param
