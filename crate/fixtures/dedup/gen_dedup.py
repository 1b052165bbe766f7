"""Regenerates fixtures/dedup/repos/: 100 files, 17 groups of byte-identical files.

Group sizes: ten pairs, five triples, two quadruples (43 files). The other 57
files are unique, several of them near-duplicates of a group member (one byte
changed, CRLF endings, missing final newline, trailing space) that must survive.
"""
import os
import random
import shutil

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "repos")
REPOS = ["r1", "r2", "r3", "r4", "r5"]


def body(r, k):
    name = f"fn_{k}_{r.randint(0, 10**6)}"
    return (f"def {name}(x):\n"
            f"    y = x * {r.randint(2, 99)}\n"
            f"    return y + {r.randint(0, 99)}\n")


def main():
    r = random.Random(17)
    shutil.rmtree(OUT, ignore_errors=True)
    files = []  # (text)
    sizes = [2] * 10 + [3] * 5 + [4] * 2
    originals = []
    for g, size in enumerate(sizes):
        text = body(r, g)
        originals.append(text)
        files.extend([text] * size)
    uniques = []
    for t in originals[:3]:
        uniques.append(t.replace("x", "z", 1))
    for t in originals[3:6]:
        uniques.append(t.replace("\n", "\r\n"))
    for t in originals[6:9]:
        uniques.append(t[:-1])
    for t in originals[9:12]:
        uniques.append(t.replace("\n", " \n", 1))
    k = 100
    while len(uniques) < 57:
        uniques.append(body(r, k))
        k += 1
    files.extend(uniques)
    assert len(files) == 100
    r.shuffle(files)
    for i, text in enumerate(files):
        repo = REPOS[i % len(REPOS)]
        sub = "pkg" if i % 2 else "lib"
        d = os.path.join(OUT, repo, sub)
        os.makedirs(d, exist_ok=True)
        with open(os.path.join(d, f"m{i:03}.py"), "w", newline="") as f:
            f.write(text)


if __name__ == "__main__":
    main()
