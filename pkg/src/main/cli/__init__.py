"""
Command Line (__init__.py)

Entry point `main.py` with the dims, maxrank, betti and horace subcommands,
the INI configuration reader and the validated run settings.
"""
