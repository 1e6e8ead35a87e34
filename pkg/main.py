#!/usr/bin/env python3
"""
QDCART - Main Application Entry Point
"""
import sys

from src.presentation.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
