import sys

from circleweights.cli import main

sys.exit(main())
