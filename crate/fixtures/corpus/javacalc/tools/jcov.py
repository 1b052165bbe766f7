"""Statement line coverage of one Java source file under a test class.

A line is coverable when it holds a statement: it ends with `;` or opens an
`if`/`for`/`while` header. Each such line gets a `Cov.hit(N);` probe prepended
on the same line, so line numbers are unchanged.

usage: jcov.py --source FILE --out REPORT --test-class NAME [--results JSON]
"""
import argparse
import glob
import os
import re
import subprocess
import sys

HEADER = re.compile(r"^(if|for|while)\s*\(")


def coverable(lines):
    out = []
    for i, line in enumerate(lines, 1):
        s = line.strip()
        if s.startswith("//") or s.startswith("*") or s.startswith("import ") or s.startswith("package "):
            continue
        if s.endswith(";") or HEADER.match(s):
            out.append(i)
    return out


def report(path, source, lines, hits=()):
    rows = "".join(
        '      <line nr="%d" mi="%d" ci="%d"/>\n' % (n, 0 if n in hits else 1, 1 if n in hits else 0) for n in lines
    )
    with open(path, "w") as fh:
        fh.write('<?xml version="1.0" encoding="UTF-8"?>\n<report name="jcov">\n  <package name="">\n')
        fh.write('    <sourcefile name="%s">\n%s    </sourcefile>\n  </package>\n</report>\n' % (source, rows))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--source", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--test-class", required=True)
    ap.add_argument("--results", default="cov-results.json")
    args = ap.parse_args()

    with open(args.source) as fh:
        src = fh.read().split("\n")
    lines = coverable(src)
    name = os.path.basename(args.source)
    # an all-missed report stands if the run dies before the shutdown hook
    report(args.out, name, lines)

    probed = list(src)
    for n in lines:
        line = probed[n - 1]
        indent = len(line) - len(line.lstrip())
        probed[n - 1] = line[:indent] + "Cov.hit(%d); " % n + line[indent:]
    os.makedirs("build/cov-src", exist_ok=True)
    inst = os.path.join("build/cov-src", name)
    with open(inst, "w") as fh:
        fh.write("\n".join(probed))

    others = [p for p in glob.glob("**/*.java", recursive=True) if not p.startswith("build") and os.path.normpath(p) != os.path.normpath(args.source)]
    build = subprocess.run(["javac", "-d", "build/cov-classes", inst] + sorted(others))
    if build.returncode != 0:
        return build.returncode
    run = subprocess.run(
        [
            "java",
            "-Djcov.out=" + args.out,
            "-Djcov.source=" + name,
            "-Djcov.lines=" + ",".join(map(str, lines)),
            "-cp",
            "build/cov-classes",
            "TestRunner",
            args.test_class,
            args.results,
        ]
    )
    return run.returncode


if __name__ == "__main__":
    sys.exit(main())
