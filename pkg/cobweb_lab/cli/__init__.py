from .cmd import entrypoint, main, run

__all__ = ["entrypoint", "main", "run"]
