import sys

from humplab.cli import main

sys.exit(main())
