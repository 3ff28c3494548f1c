#!/usr/bin/env python3
"""
tripod_qpg - cross-Kerr polarization phase gate in a tripod EIT medium
"""

__version__ = "1.0.0"
