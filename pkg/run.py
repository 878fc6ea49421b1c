#!/usr/bin/env python3
"""
Entry point for the prismatic command line
Run with: python run.py <command> [options]
"""
import sys
import os

# Add src to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from prismatic.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
