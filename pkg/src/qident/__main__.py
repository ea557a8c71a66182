"""Module entry point: ``python -m qident`` behaves like the ``qident`` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
