#!/usr/bin/env python3
"""
Entry point for running golombz as a module with python -m golombz
"""

from .cli import main

if __name__ == "__main__":
    main()
