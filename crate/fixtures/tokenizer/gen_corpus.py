"""Regenerates fixtures/tokenizer/files/: 240 small source-like files.

Deterministic (seeded). Mixes Python and Java shapes, tabs, CRLF endings,
non-ASCII identifiers and strings, long runs of spaces and punctuation, and
literal spellings of the special tokens that must stay plain text.
"""
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "files")

WORDS = ["alpha", "beta", "count", "total", "item", "value", "node", "name",
         "buffer", "index", "größe", "naïve", "ключ", "値", "λ", "emoji_😀"]
SPECIAL_SPELLINGS = ["<|codetestpair|>", "<|pad|>", "<|bos|>", "<|eos|>", "<|", "|>"]
PUNCT = "()[]{}<>=+-*/%&|^~!?.,;:@#$\\'\""


def ident(r):
    w = r.choice(WORDS)
    if r.random() < 0.3:
        w += "_" + r.choice(WORDS)
    if r.random() < 0.2:
        w += str(r.randint(0, 999))
    return w


def py_file(r):
    lines = ["# generated sample", "import os", ""]
    for _ in range(r.randint(1, 4)):
        fn = ident(r)
        lines.append(f"def {fn}({ident(r)}, {ident(r)}=None):")
        for _ in range(r.randint(1, 5)):
            lines.append(f"    {ident(r)} = {ident(r)} {r.choice('+-*/')} {r.randint(0, 99)}")
        if r.random() < 0.4:
            lines.append(f"    s = \"{r.choice(SPECIAL_SPELLINGS)} {ident(r)}\"")
        lines.append(f"    return {ident(r)}")
        lines.append("")
    return "\n".join(lines) + "\n"


def java_file(r):
    cls = ident(r).capitalize()
    lines = [f"public class {cls} {{"]
    for _ in range(r.randint(1, 4)):
        lines.append(f"\tpublic int {ident(r)}(int {ident(r)}) {{")
        for _ in range(r.randint(1, 4)):
            lines.append(f"\t\tint {ident(r)} = {r.randint(0, 9)} {r.choice('+-*')} {ident(r)};")
        if r.random() < 0.3:
            lines.append(f"\t\t// {r.choice(SPECIAL_SPELLINGS)}")
        lines.append("\t\treturn 0;")
        lines.append("\t}")
    lines.append("}")
    sep = "\r\n" if r.random() < 0.3 else "\n"
    return sep.join(lines) + sep


def noise_file(r):
    parts = []
    for _ in range(r.randint(5, 40)):
        k = r.random()
        if k < 0.3:
            parts.append(" " * r.randint(1, 80))
        elif k < 0.5:
            parts.append("".join(r.choice(PUNCT) for _ in range(r.randint(1, 90))))
        elif k < 0.6:
            parts.append("\n" * r.randint(1, 3) + "\t" * r.randint(0, 3))
        elif k < 0.7:
            parts.append(r.choice(SPECIAL_SPELLINGS))
        elif k < 0.8:
            parts.append("".join(chr(r.randint(0x80, 0x2FFF)) for _ in range(r.randint(1, 10))))
        else:
            parts.append(ident(r) * r.randint(1, 12))
    return "".join(parts)


def main():
    r = random.Random(20240601)
    os.makedirs(OUT, exist_ok=True)
    for i in range(240):
        kind = i % 3
        if kind == 0:
            name, text = f"s{i:03}.py", py_file(r)
        elif kind == 1:
            name, text = f"S{i:03}.java", java_file(r)
        else:
            name, text = f"n{i:03}.txt", noise_file(r)
        with open(os.path.join(OUT, name), "w", encoding="utf-8", newline="") as f:
            f.write(text)
    # edge cases
    for name, text in [("e_empty.txt", ""), ("e_space.txt", " "), ("e_nl.txt", "\n"),
                       ("e_sep.txt", "<|codetestpair|>"), ("e_bom.txt", "﻿x = 1\n")]:
        with open(os.path.join(OUT, name), "w", encoding="utf-8", newline="") as f:
            f.write(text)


if __name__ == "__main__":
    main()
