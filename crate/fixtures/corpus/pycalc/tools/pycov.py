"""Line coverage of one source file while running a script.

Coverable lines are the line numbers of statements in the file's syntax tree.
The report uses the `files` layout of coverage.py's JSON output.

usage: pycov.py --source FILE --out REPORT -- SCRIPT [ARGS...]
"""
import argparse
import ast
import json
import os
import runpy
import sys


def statement_lines(path):
    with open(path) as fh:
        tree = ast.parse(fh.read(), path)
    return sorted({n.lineno for n in ast.walk(tree) if isinstance(n, ast.stmt)})


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--source", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("script", nargs=argparse.REMAINDER)
    args = ap.parse_args()
    script = [a for a in args.script if a != "--"]
    target = os.path.abspath(args.source)
    hit = set()

    def tracer(frame, event, arg):
        if frame.f_code.co_filename != target:
            return None
        if event == "line":
            hit.add(frame.f_lineno)
        return tracer

    sys.argv = script
    sys.path.insert(0, os.path.dirname(target))
    sys.settrace(tracer)
    code = 0
    try:
        runpy.run_path(script[0], run_name="__main__")
    except SystemExit as e:
        code = e.code or 0
    finally:
        sys.settrace(None)

    coverable = statement_lines(target)
    executed = sorted(hit & set(coverable))
    missing = sorted(set(coverable) - hit)
    report = {"files": {args.source: {"executed_lines": executed, "missing_lines": missing}}}
    with open(args.out, "w") as fh:
        json.dump(report, fh, sort_keys=True)
    return code


if __name__ == "__main__":
    sys.exit(main())
