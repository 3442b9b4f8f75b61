import logging
import os
from typing import List, Optional

_LOGGER_INITIALIZED = False

_BASE = "cobweb-lab"
CONSOLE_HANDLER = "cobweb-lab-console"
FILE_HANDLER = "cobweb-lab-file"


def own_handlers() -> List[logging.Handler]:
    """Handlers installed by init_logger, ignoring any added by a host (e.g. pytest capture)."""
    return [
        h
        for h in logging.getLogger(_BASE).handlers
        if h.get_name() in (CONSOLE_HANDLER, FILE_HANDLER)
    ]


def init_logger(output_dir: Optional[str] = None, verbose: bool = False):
    """Initialize global logger configuration once."""

    global _LOGGER_INITIALIZED
    if _LOGGER_INITIALIZED:
        return

    log_level = logging.DEBUG if verbose else logging.INFO

    parent = logging.getLogger(_BASE)

    # Avoid re-adding our handlers if already configured
    if own_handlers():
        _LOGGER_INITIALIZED = True
        return

    # handlers live on the parent; children propagate to it
    parent.setLevel(logging.DEBUG)
    parent.propagate = False

    # stdout carries command payloads, so the console handler writes to stderr
    console = logging.StreamHandler()
    console.set_name(CONSOLE_HANDLER)
    console.setLevel(log_level)
    console.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
    parent.addHandler(console)

    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
        fh = logging.FileHandler(os.path.join(output_dir, "run.log"))
        fh.set_name(FILE_HANDLER)
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(
            logging.Formatter(
                "%(asctime)s %(levelname)-8s [%(name)s] %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        parent.addHandler(fh)

    _LOGGER_INITIALIZED = True


def get_logger(name: str) -> logging.Logger:
    """
    Return a named logger under the 'cobweb-lab' namespace so it inherits the
    parent's handlers.
    Example: get_logger(__name__) -> logger name "cobweb-lab.cobweb_lab.ferrers"
    """
    if name and not name.startswith(_BASE):
        fullname = f"{_BASE}.{name}"
    else:
        fullname = name or _BASE
    return logging.getLogger(fullname)
