from .logger import get_logger, Logger, remove_logger

__all__ = ["get_logger", "Logger", "remove_logger"] 