#!/usr/bin/env python3
"""
Launcher script for the intersection transform command line.

Usage:
    python run.py count-paths --graph chain.g --s 0 --t 2 --len 2
    OR
    ./run.py bench  (after chmod +x run.py)
"""

import sys
from pathlib import Path

# Project root on the path so the src package imports
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

# Run the application
from src import main

if __name__ == "__main__":
    main()
