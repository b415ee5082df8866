import logging
import os
from typing import Optional, Union

import colorlog

BASE_FORMAT = ('%(asctime)s %(process)d-%(thread)d '
               '%(levelname)-8s %(name)s: %(message)s')
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
LOG_FILENAME = 'geo_kernel_lab.log'


class LoggingConfig:
    """Manages logging configuration for the toolkit and its command line."""

    @staticmethod
    def setup(log_level: Union[int, str] = logging.INFO,
              log_dir: Optional[str] = None) -> bool:
        """
        Set up logging configuration.

        Args:
            log_level (int | str): Console logging level
            log_dir (str): Directory for ``geo_kernel_lab.log``; console only
                when None

        Returns:
            bool: True if configuration was successful, False otherwise
        """
        if isinstance(log_level, str):
            log_level = logging.getLevelName(log_level.upper())
        try:
            root = logging.getLogger()
            for handler in list(root.handlers):
                root.removeHandler(handler)

            console_handler = colorlog.StreamHandler()
            console_handler.setFormatter(colorlog.ColoredFormatter(
                fmt=('%(log_color)s' + BASE_FORMAT + '%(reset)s'),
                datefmt=DATE_FORMAT,
                log_colors={
                    'DEBUG': 'cyan',
                    'INFO': 'green',
                    'WARNING': 'yellow',
                    'ERROR': 'red',
                    'CRITICAL': 'red,bg_white',
                },
                style='%'
            ))
            console_handler.setLevel(log_level)
            root.setLevel(logging.DEBUG)
            root.addHandler(console_handler)

            if log_dir:
                # File handler always logs at DEBUG level
                LoggingConfig.add_file_handler(root, LOG_FILENAME, logging.DEBUG, log_dir)

            logging.getLogger('geo_kernel_lab').setLevel(logging.DEBUG)
            root.debug("Console logging level set to: %s",
                       logging.getLevelName(log_level))
            return True

        except Exception as e:
            logging.basicConfig(level=log_level, format=BASE_FORMAT,
                                datefmt=DATE_FORMAT)
            logging.error("Error setting up logging configuration: %s", str(e))
            return False

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        """
        Get a logger instance with the specified name.

        Args:
            name (str): Name for the logger

        Returns:
            logging.Logger: Configured logger instance
        """
        return logging.getLogger(name)

    @staticmethod
    def add_file_handler(logger: logging.Logger, filename: str,
                         level: int = logging.DEBUG,
                         log_dir: str = 'logs') -> logging.Handler:
        """
        Add a file handler to the specified logger.

        Args:
            logger (logging.Logger): Logger instance to add handler to
            filename (str): Name of the log file
            level (int): Logging level for the file handler
            log_dir (str): Directory holding the log file

        Returns:
            logging.Handler: The attached handler
        """
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(os.path.join(log_dir, filename))
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(BASE_FORMAT, datefmt=DATE_FORMAT))
        logger.addHandler(file_handler)
        return file_handler
