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
