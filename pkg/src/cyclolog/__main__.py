import sys

from cyclolog.cli import main

sys.exit(main())
