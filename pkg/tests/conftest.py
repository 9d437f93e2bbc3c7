import os
import sys

import pytest

# Add the project root directory to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.models.lattice import SurfaceModel  # noqa: E402
from src.utils.settings import use_settings  # noqa: E402


@pytest.fixture
def even_model() -> SurfaceModel:
    """The fake quadric with even Neron-Severi lattice."""
    return SurfaceModel.even()


@pytest.fixture
def odd_model() -> SurfaceModel:
    """The fake quadric with odd Neron-Severi lattice."""
    return SurfaceModel.odd()


@pytest.fixture(params=["even", "odd"])
def model(request) -> SurfaceModel:
    """Both models, one per parametrized run."""
    return SurfaceModel.even() if request.param == "even" else SurfaceModel.odd()


@pytest.fixture(autouse=True)
def reset_settings():
    """Undo any settings override a test installs."""
    yield
    use_settings(None)
