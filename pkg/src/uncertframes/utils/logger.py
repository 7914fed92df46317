"""
Config-driven loggers for uncertframes.

Every logger writes to a rotating file under `paths.logs`. Console output,
when enabled, goes to stderr: stdout carries report payloads only.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

from uncertframes.config.config_manager import ConfigManager
from uncertframes.utils.filepaths import resolve_project_path

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def parse_level(name: str, where: str) -> int:
    """Map a level name from the config onto a logging constant."""
    level = logging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError(f"Invalid log level for {where}: {name!r}")
    return level


class CustomLogger:
    def __init__(self, module_name: Optional[str] = None) -> None:
        settings = ConfigManager().logging
        file_cfg = settings.handlers["file"]

        self.name = module_name or settings.app_name
        self.level = parse_level(settings.level, "logging.level")
        self.file_level = parse_level(file_cfg.level, "logging.handlers.file")
        self.log_dir = resolve_project_path(ConfigManager().paths.logs)
        self.log_file = os.path.join(self.log_dir, file_cfg.filename)
        self.max_bytes = file_cfg.maxBytes
        self.backup_count = file_cfg.backupCount
        self.log_to_console = settings.log_to_console

    def _file_handler(self) -> logging.Handler:
        handler = RotatingFileHandler(
            self.log_file, maxBytes=self.max_bytes, backupCount=self.backup_count
        )
        handler.setLevel(self.file_level)
        return handler

    def _console_handler(self) -> logging.Handler:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(self.level)
        return handler

    def get_logger(self) -> logging.Logger:
        logger = logging.getLogger(self.name)
        logger.setLevel(self.level)
        logger.propagate = False
        if logger.handlers:
            return logger

        os.makedirs(self.log_dir, exist_ok=True)
        handlers = [self._file_handler()]
        if self.log_to_console:
            handlers.append(self._console_handler())

        formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)
        for handler in handlers:
            handler.setFormatter(formatter)
            logger.addHandler(handler)

        logger.debug("Logger %s writing to %s", self.name, self.log_file)
        return logger
