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

log = logging.getLogger(__name__)

PASS = 'PASS'
FAIL = 'FAIL'
ERROR = 'ERROR'
VERDICTS = (PASS, FAIL, ERROR)


class Check():
    """Outcome of one named check."""

    def __init__(self, name, verdict, mode='symbolic', witnesses=None,
                 details=None, elapsed=None):
        # Watchdog
        if verdict not in VERDICTS:
            raise ValueError('verdict must be one of %s, got %r'
                             % (', '.join(VERDICTS), verdict))

        self.name = name
        self.verdict = verdict
        self.mode = mode
        self.witnesses = list(witnesses or [])
        self.details = dict(details or {})
        self.elapsed = elapsed

    @property
    def passed(self):
        return self.verdict == PASS

    def as_dict(self):
        return {'name': self.name,
                'verdict': self.verdict,
                'mode': self.mode,
                'witnesses': self.witnesses,
                'details': self.details}

    def __repr__(self):
        return 'Check(%s: %s)' % (self.name, self.verdict)


class Judge():
    """
    A Judge accumulates the checks of one run and computes:
        - Number of checks, passed and failed
        - Pass rate (percent)
        - First failing check (in name order)
        - Whether the whole run passes
    """

    def __init__(self, suite):
        """
        :param suite: Name of the suite being judged.
        """
        self.suite = suite
        self._checks = {}

    def feed(self, check):
        """
        Record one check. A check name can only be judged once.

        :param check: Check instance.
        """
        if check.name in self._checks:
            raise ValueError('check %r was already judged' % check.name)
        self._checks[check.name] = check
        level = logging.INFO if check.passed else logging.WARNING
        log.log(level, '%s: %s', check.name, check.verdict)

    def feed_outcome(self, name, passed, mode='symbolic', witnesses=None,
                     details=None, elapsed=None):
        """Shortcut for feed(Check(...)) from a boolean."""
        self.feed(Check(name, PASS if passed else FAIL, mode, witnesses,
                        details, elapsed))

    @property
    def checks(self):
        """ Checks sorted by name (list) """
        return [self._checks[k] for k in sorted(self._checks)]

    @property
    def n_checks(self):
        """ Number of checks (int) """
        return len(self._checks)

    @property
    def n_passed(self):
        """ Number of passed checks (int) """
        return sum(1 for c in self._checks.values() if c.passed)

    @property
    def n_failed(self):
        """ Number of failed or errored checks (int) """
        return self.n_checks - self.n_passed

    @property
    def pass_rate(self):
        """ Pass rate (percent float) """
        return float(100 * self.n_passed / self.n_checks) \
            if self.n_checks > 0 else 0

    @property
    def first_failure(self):
        """ Name of the first failing check, or None """
        for check in self.checks:
            if not check.passed:
                return check.name
        return None

    @property
    def passed(self):
        """ True iff there is at least one check and all passed """
        return self.n_checks > 0 and self.n_failed == 0
