import sys

from gcqc.cli import main

sys.exit(main())
