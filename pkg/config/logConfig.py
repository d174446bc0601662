import logging
import sys

from config.settings import LOG_LEVEL

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(level: str = LOG_LEVEL) -> None:
    """Send all log records to stderr so reports on stdout stay clean"""
    root = logging.getLogger()
    handler = next((h for h in root.handlers if getattr(h, "_ggm_handler", False)), None)
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._ggm_handler = True
        root.addHandler(handler)
    else:
        # sys.stderr may have been swapped, and the old stream closed, since the first call
        handler.stream = sys.stderr
    root.setLevel(level.upper())
