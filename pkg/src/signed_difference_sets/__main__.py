"""Entry point for running the package as a module (python -m signed_difference_sets)."""

from .main import main

if __name__ == "__main__":
    main()
