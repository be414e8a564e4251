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

import time


class peter:
    """
    Timer for a block of code. Prints "msg... DONE (took x seconds)"
    around it unless quiet; the duration is kept in .elapsed.
    """

    def __init__(self, msg="Running", quiet=False):
        """
        :param msg: Message shown before the block runs.
        :param quiet: If True, only measure.
        """
        self.msg = msg
        self.quiet = quiet
        self.elapsed = None

    def __enter__(self):
        if not self.quiet:
            print('%s... ' % self.msg, flush=True, end='')
        self._start = time.perf_counter()
        return self

    def __exit__(self, type, value, traceback):
        self.elapsed = time.perf_counter() - self._start
        if self.quiet:
            return
        if type is None:
            print('DONE (took %4f seconds)' % self.elapsed, flush=True)
        else:
            print('FAILED (after %4f seconds)' % self.elapsed, flush=True)
