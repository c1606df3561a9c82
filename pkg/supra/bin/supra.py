#!/usr/bin/env python

from supra import cli

if __name__ == "__main__":
    cli.execute_from_command_line()
