"""`python -m primerec` entry point."""

from .cli import main

raise SystemExit(main())
