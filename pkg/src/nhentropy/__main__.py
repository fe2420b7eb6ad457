# src/nhentropy/__main__.py
import sys

from nhentropy.cli.main import main

sys.exit(main())
