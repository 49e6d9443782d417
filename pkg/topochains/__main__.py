#Exact chain-level topology functions.
#
#License: MIT

"""Entry point for 'python -m topochains'."""
import sys

from topochains.cli import main

sys.exit(main())
