import logging
import os
import sys
from abc import ABC

DEBUG_ENV = "OTDR_DEBUG"
LOG_FORMAT = '%(asctime)s %(module)-20s %(levelname)-5s %(message)s'

_forced_level: int = 0


def force_level(level: int) -> None:
    """Overrides the environment level for every logger created from now on, and for the ones already created."""
    global _forced_level
    _forced_level = level
    for name in list(logging.root.manager.loggerDict):
        logger = logging.getLogger(name)
        if getattr(logger, "_otdr_managed", False):
            logger.setLevel(level)


def debug_level_for(name: str) -> int:
    if _forced_level:
        return _forced_level
    level = logging.WARNING
    debug_info = os.getenv(DEBUG_ENV, "")
    for debug_element_level in debug_info.split(","):
        if debug_element_level == "":
            continue
        split_debug_element_level = debug_element_level.split(":")
        if len(split_debug_element_level) == 2:
            element_name = split_debug_element_level[0]
            debug_level_str = split_debug_element_level[1]
            if element_name == name and debug_level_str.isnumeric():
                debug_level = int(debug_level_str)
            else:
                continue

        elif len(split_debug_element_level) == 1 and split_debug_element_level[0].isnumeric():
            debug_level = int(split_debug_element_level[0])

        else:
            sys.stderr.write(f"incorrect debug specification {debug_element_level}\n")
            continue

        if debug_level == 0:
            level = logging.ERROR
        elif debug_level == 1:
            level = logging.WARNING
        elif debug_level == 2:
            level = logging.INFO
        elif debug_level >= 3:
            level = logging.DEBUG
    return level


def get_logger(name: str) -> logging.Logger:
    log = logging.getLogger(name)
    if not log.hasHandlers():
        handler = logging.StreamHandler(stream=sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        log.addHandler(handler)
        log.propagate = False
    log._otdr_managed = True
    log.setLevel(debug_level_for(name.split(".")[-1]))
    return log


class BaseObject(ABC):
    def __init__(self):
        self.log: logging.Logger = get_logger(self.__class__.__name__)
