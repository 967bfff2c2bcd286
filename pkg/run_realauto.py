#!/usr/bin/env python3
"""
Run the realauto command-line tool from a source checkout.

Usage:
    python run_realauto.py build --a 4 --out arctan4.csv
    python run_realauto.py counterexample --kind piecewise --n 3
"""

import sys

from src.realauto.cli import main

if __name__ == "__main__":
    sys.exit(main())
