# Service exports

from src.services import table_service, verification_service

__all__ = [
    "table_service",
    "verification_service",
]
