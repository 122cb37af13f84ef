import sys

from cgoppa.cli import main

sys.exit(main())
