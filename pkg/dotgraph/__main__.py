"""
Main entry point when running as a module.
"""

import sys

from dotgraph.run import main

if __name__ == "__main__":
    sys.exit(main())
