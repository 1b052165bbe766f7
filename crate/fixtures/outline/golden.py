"""Writes golden.json: methods found by full-grammar parsers for every file here.

Python files use the standard `ast` module, Java files use `javalang`
(pip install javalang). A method is any function defined at module level or
directly in a class (classes may nest), or for Java any method or constructor
with a body declared in a type body. Tests are methods whose name starts with
"test", plus Java methods carrying a JUnit test annotation.
"""
import ast
import json
import os

import javalang

HERE = os.path.dirname(os.path.abspath(__file__))
JAVA_TEST_ANNOTATIONS = {"Test", "ParameterizedTest", "RepeatedTest", "TestFactory", "TestTemplate"}


def py_methods(src):
    out = []

    def walk(body):
        for node in body:
            if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef)):
                out.append((node.name, node.name.startswith("test")))
            elif isinstance(node, ast.ClassDef):
                walk(node.body)
            elif isinstance(node, ast.If):
                # module-level `if __name__ == ...` blocks hold no methods here
                pass

    walk(ast.parse(src).body)
    return out


def java_methods(src):
    out = []
    types = (javalang.tree.ClassDeclaration, javalang.tree.InterfaceDeclaration, javalang.tree.EnumDeclaration)

    def is_test(m):
        names = {a.name.split(".")[-1] for a in (m.annotations or [])}
        return bool(names & JAVA_TEST_ANNOTATIONS) or m.name.startswith("test")

    def walk(decl):
        body = decl.body
        if isinstance(decl, javalang.tree.EnumDeclaration):
            body = body.declarations
        for m in body:
            if isinstance(m, types):
                walk(m)
            elif isinstance(m, javalang.tree.ConstructorDeclaration):
                out.append((m.name, is_test(m)))
            elif isinstance(m, javalang.tree.MethodDeclaration) and m.body is not None:
                out.append((m.name, is_test(m)))

    for t in javalang.parse.parse(src).types:
        walk(t)
    return out


def main():
    golden = {}
    for lang, fn in (("python", py_methods), ("java", java_methods)):
        d = os.path.join(HERE, lang)
        for name in sorted(os.listdir(d)):
            src = open(os.path.join(d, name), encoding="utf-8").read()
            ms = fn(src)
            golden[f"{lang}/{name}"] = {
                "methods": len(ms),
                "tests": sum(1 for _, t in ms if t),
                "names": [n for n, _ in ms],
                "test_names": [n for n, t in ms if t],
            }
    with open(os.path.join(HERE, "golden.json"), "w") as f:
        json.dump(golden, f, indent=1, sort_keys=True)
        f.write("\n")
    print(f"{len(golden)} files")


if __name__ == "__main__":
    main()
