import pytest

from pellsum import kernels


@pytest.fixture(params=["python", "cython"])
def backend(request, monkeypatch):
    """Run a test on the pure-Python kernels and, when built, the compiled ones."""
    if request.param == "cython":
        if kernels._native is None:
            pytest.skip("compiled kernels not built")
    else:
        monkeypatch.setattr(kernels, "_native", None)
    return request.param
