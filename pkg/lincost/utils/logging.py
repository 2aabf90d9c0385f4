# Copyright 2026 The LinCost Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
LinCost logger.

One process-wide logger named ``lincost``. Records go to stderr and, unless
``LINCOST_IS_TESTING`` is set, to a timestamped file under
``<DEFAULT_WORKING_DIR>/logs`` that is created on first use.
"""

import datetime
import logging as _logging
import os
import sys as _sys
import threading
import traceback as _traceback

from lincost.const import DEFAULT_WORKING_DIR, ENV

_logger = None
_logger_lock = threading.Lock()

log_dir = os.path.join(DEFAULT_WORKING_DIR, 'logs')
default_log_format = '[PID#%(process)s:%(asctime)s:%(filename)s#L%(lineno)d:%(levelname)s]: %(message)s'


def _log_file_path():
    os.makedirs(log_dir, exist_ok=True)
    stamp = datetime.datetime.now().strftime('%Y-%m-%d-%H-%M-%S')
    return os.path.join(log_dir, '%s-%d.log' % (stamp, os.getpid()))


def _first_foreign_frame(depth):
    """Code and frame of the nearest caller outside this module."""
    # pylint: disable=protected-access
    frame = _sys._getframe(depth)
    here = frame.f_code.co_filename
    frame = frame.f_back
    while frame is not None and frame.f_code.co_filename == here:
        frame = frame.f_back
    return (frame.f_code, frame) if frame is not None else (None, None)


def _find_caller(stack_info=False, stacklevel=1):  # pylint: disable=unused-argument
    code, frame = _first_foreign_frame(4)
    sinfo = '\n'.join(_traceback.format_stack()) if stack_info else None
    if code is None:
        return '(unknown file)', 0, '(unknown function)', sinfo
    return code.co_filename, frame.f_lineno, code.co_name, sinfo


def _handlers():
    handlers = [_logging.StreamHandler()]
    if not ENV.LINCOST_IS_TESTING.val:
        handlers.append(_logging.FileHandler(_log_file_path()))
    formatter = _logging.Formatter(default_log_format)
    for h in handlers:
        h.setFormatter(formatter)
    return handlers


def get_logger():
    """Get the LinCost logger instance."""
    global _logger
    if _logger is not None:
        return _logger
    with _logger_lock:
        if _logger is None:
            logger = _logging.getLogger('lincost')
            logger.propagate = False
            logger.findCaller = _find_caller
            for h in _handlers():
                logger.addHandler(h)
            _logger = logger
    return _logger


def log(level, msg, *args, **kwargs):
    """Log a message at a given level."""
    get_logger().log(level, msg, *args, **kwargs)


def debug(msg, *args, **kwargs):
    """Log a message at the DEBUG level."""
    get_logger().debug(msg, *args, **kwargs)


def info(msg, *args, **kwargs):
    """Log a message at the INFO level."""
    get_logger().info(msg, *args, **kwargs)


def warning(msg, *args, **kwargs):
    """Log a message at the WARNING level."""
    get_logger().warning(msg, *args, **kwargs)


def error(msg, *args, **kwargs):
    """Log a message at the ERROR level."""
    get_logger().error(msg, *args, **kwargs)


def critical(msg, *args, **kwargs):
    """Log a message at the CRITICAL level."""
    get_logger().critical(msg, *args, **kwargs)


def set_verbosity(v):
    """Set the level of the lincost logger; accepts level numbers or names in any case."""
    get_logger().setLevel(v.upper() if isinstance(v, str) else v)


def get_verbosity():
    """Effective level of the lincost logger."""
    return get_logger().getEffectiveLevel()
