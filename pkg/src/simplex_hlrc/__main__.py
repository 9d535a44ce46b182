"""Entry point for simplex-hlrc package."""

from simplex_hlrc.cli.main import main

if __name__ == "__main__":
    main()
