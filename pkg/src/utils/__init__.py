from .config import get_rng
from .errors import QTorusError
from .serialization import canonical_json

__all__ = ["get_rng", "QTorusError", "canonical_json"]
