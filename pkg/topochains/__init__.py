"""Exact chain-level invariants of finite reduced simplicial sets."""

__title__ = 'topochains'
__version__ = '0.1.0'
__author__ = 'topochains developers'
__license__ = 'MIT'
__copyright__ = 'Copyright (C) 2026 topochains developers'

from topochains import utils
from topochains import linear
from topochains import groups
from topochains import simplicial
from topochains import coalgebra
from topochains import cobar
from topochains import twisted
from topochains import detect
