import sys

from app.cli.router import run

if __name__ == "__main__":
    sys.exit(run())
