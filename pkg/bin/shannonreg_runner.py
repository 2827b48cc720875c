#!/usr/bin/env python
"""Simple command line script to execute shannonreg."""

from shannonreg.console import cmd


if __name__ == "__main__":
    cmd()
