#!/usr/bin/env python3
"""
Run the q-kernel command-line tool
"""

import sys

from src.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
