"""Build-time check that the built-in constant profiles are closed (see circlecolor.closure)."""

import sys

from circlecolor.closure import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
