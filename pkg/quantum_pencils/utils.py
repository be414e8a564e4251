__copyright__ = \
"""
Copyright (c) 2026 The quantum-pencils developers.
All rights reserved.

This software is distributed for research use in computer algebra.

Last Modified: 10/17/2026
"""
__license__ = "BSD-3-Clause"
__authors__ = "The quantum-pencils developers"
__version__ = "1.0.0"

import logging

from ballpark import ballpark
from tqdm import tqdm

log = logging.getLogger(__name__)

# Set by run.main from --no-progress
SHOW_PROGRESS = True


class QuantumPencilsError(Exception):
    """Root of every error raised on purpose by this package."""


class ParameterError(QuantumPencilsError, ValueError):
    """Parameter sets differ, or a parameter name is unknown."""


class SpecializationError(QuantumPencilsError, ZeroDivisionError):
    """A denominator vanishes at a specialization point."""

    def __init__(self, message, assignment=None):
        super().__init__(message)
        self.assignment = dict(assignment or {})


class FieldDivisionError(QuantumPencilsError, ZeroDivisionError):
    """Exact division by the zero scalar."""


class ParseError(QuantumPencilsError, ValueError):
    """Canonical text that cannot be read back."""

    def __init__(self, message, filename=None, lineno=None):
        if filename is not None:
            where = filename if lineno is None else '%s:%s' % (filename, lineno)
            message = '%s: %s' % (where, message)
        super().__init__(message)
        self.filename = filename
        self.lineno = lineno


class ShapeError(QuantumPencilsError, ValueError):
    """Ambient spaces, degrees or matrix shapes do not agree."""


class ConventionError(QuantumPencilsError):
    """A computed object contradicts the conventions it was built with."""


class ConfigError(QuantumPencilsError, ValueError):
    """Malformed run configuration."""


class ReportError(QuantumPencilsError, ValueError):
    """Unreadable report, or reports that cannot be compared."""


def progress(iterable, desc=None, total=None):
    """
    Wrap an iterable in a tqdm progress bar, unless progress bars
    were disabled from the command line.

    :param iterable: Anything iterable.
    :param desc: Short label shown left of the bar.
    :param total: Number of items, if len() does not work on the iterable.
    :return: An iterable yielding the same items.
    """
    return tqdm(iterable,
                desc=desc,
                total=total,
                leave=False,
                disable=not SHOW_PROGRESS)


def humanize(count):
    """Human readable count for log messages (e.g. 1.2K)."""
    return ballpark(count)

