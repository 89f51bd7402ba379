#!/usr/bin/env python3

# #############################################################################
# test.py
# =======
# #############################################################################

"""
Run the doctests and the smoke bench.
"""

import argparse
import pathlib
import subprocess
import sys

project_root_dir = pathlib.Path(__file__).parent.absolute()
build_dir = project_root_dir / "build"
suites = dict(
    doctest=f'sphinx-build -b doctest "{project_root_dir / "doc"}" "{build_dir / "doctest"}"',
    modules=f'"{sys.executable}" -m pytest "{project_root_dir / "pybiclique"}" "{project_root_dir / "doc" / "general"}"',
    smoke=f'"{sys.executable}" -m pybiclique.cli bench --suite smoke -o "{build_dir / "smoke.jsonl"}"',
)


def run_suite(name: str) -> int:
    """
    Run one test suite in the project root.

    Parameters
    ----------
    name : str
        Key of `suites`.

    Returns
    -------
    int
        Exit status of the suite.
    """
    if name not in suites:
        raise ValueError(f"Unknown test suite {name}: expected one of {', '.join(suites)}.")
    return subprocess.run(suites[name], shell=True, cwd=project_root_dir).returncode


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="pybiclique test runner.",
        epilog="When run with no arguments, all suites are executed.",
    )
    parser.add_argument("-e", help="Name of the suite to run.", type=str, choices=suites.keys())
    args = parser.parse_args()

    build_dir.mkdir(exist_ok=True)
    selected = list(suites) if args.e is None else [args.e]
    status = {name: run_suite(name) for name in selected}

    print("\nSummary\n=======")
    for name, code in status.items():
        print(f"{'Success' if code == 0 else 'Failure'}: {name}")
        print(f"   {suites[name]}")
    sys.exit(max(status.values()))
