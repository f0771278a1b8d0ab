"""Allow running as python -m simplicial_lines."""

from .app import main

if __name__ == "__main__":
    main()
