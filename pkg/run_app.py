#!/usr/bin/env python3
"""
Run dotgraph from a source checkout without installing the package.
"""

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from dotgraph.run import main

if __name__ == "__main__":
    sys.exit(main())
