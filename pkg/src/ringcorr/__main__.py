"""Entry point so `python -m ringcorr` behaves like the installed script."""

from ringcorr.cli import main

if __name__ == "__main__":
    main()
