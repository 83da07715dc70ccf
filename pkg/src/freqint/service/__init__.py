"""HTTP service wrapping the analysis library, plus its thin client."""

from .app import create_app
from .client import ServiceClient, ServiceError

__all__ = ["create_app", "ServiceClient", "ServiceError"]
