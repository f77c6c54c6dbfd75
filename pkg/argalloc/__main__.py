import sys

from .run.execute import cli

if __name__ == "__main__":
    sys.exit(cli())
