"""Reference byte-level BPE used as an oracle for the Rust tokenizer.

Deliberately naive: pair counts are recomputed from scratch after every merge.
Training input is every line (newline kept) of every file under files/, in
sorted file-name order. Writes golden.json with the merge list, the piece
count and the total token count of encoding every file.

Usage: python3 ref_bpe.py [target_size]
"""
import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
MAX_CHUNK = 64
FIRST_MERGE = 260
SPACE = set(b" \t\n\r\x0c")


def cls(b):
    if (48 <= b <= 57) or (65 <= b <= 90) or (97 <= b <= 122) or b == 95 or b >= 0x80:
        return "w"
    if b in SPACE:
        return "s"
    return "p"


def pretokenize(data):
    out = []
    i, n = 0, len(data)
    while i < n:
        start = i
        c = cls(data[i])
        while i < n and cls(data[i]) == c:
            i += 1
        if c == "s" and i < n and cls(data[i]) == "w" and data[i - 1] == 32:
            if i - start > 1:
                i -= 1  # the last space goes with the next word
            else:
                while i < n and cls(data[i]) == "w":
                    i += 1
        for s in range(start, i, MAX_CHUNK):
            out.append(data[s:min(s + MAX_CHUNK, i)])
    return out


def merge(syms, pair, new):
    out, j = [], 0
    while j < len(syms):
        if j + 1 < len(syms) and syms[j] == pair[0] and syms[j + 1] == pair[1]:
            out.append(new)
            j += 2
        else:
            out.append(syms[j])
            j += 1
    return out


def train(lines, target):
    counts = {}
    for line in lines:
        for ch in pretokenize(line):
            counts[ch] = counts.get(ch, 0) + 1
    words = [[list(ch), n] for ch, n in counts.items()]
    pieces = [bytes([b]) for b in range(256)] + [b"\x00special%d" % k for k in range(4)]
    ids = {p: k for k, p in enumerate(pieces[:256])}
    merges = []
    while len(pieces) < target:
        pc = {}
        for syms, n in words:
            for a, b in zip(syms, syms[1:]):
                pc[(a, b)] = pc.get((a, b), 0) + n
        if not pc:
            break
        best = max(pc.items(), key=lambda kv: (kv[1], -kv[0][0], -kv[0][1]))
        pair, c = best
        if c < 2:
            break
        joined = pieces[pair[0]] + pieces[pair[1]]
        if joined in ids:
            new = ids[joined]
        else:
            new = len(pieces)
            ids[joined] = new
            pieces.append(joined)
        merges.append([pair[0], pair[1], new])
        for w in words:
            w[0] = merge(w[0], pair, new)
    return merges, len(pieces)


def encode(data, merges):
    rank = {(a, b): (k, new) for k, (a, b, new) in enumerate(merges)}
    out = []
    for ch in pretokenize(data):
        syms = list(ch)
        while len(syms) > 1:
            cands = [rank[p] for p in zip(syms, syms[1:]) if p in rank]
            if not cands:
                break
            k, new = min(cands)
            syms = merge(syms, merges[k][:2], new)
        out.extend(syms)
    return out


def main():
    target = int(sys.argv[1]) if len(sys.argv) > 1 else 600
    d = os.path.join(HERE, "files")
    names = sorted(os.listdir(d))
    blobs = [open(os.path.join(d, nm), "rb").read() for nm in names]
    # keep the newline on every line but the last, like split_inclusive('\n')
    lines = []
    for b in blobs:
        parts = b.split(b"\n")
        for k, p in enumerate(parts):
            if k < len(parts) - 1:
                lines.append(p + b"\n")
            elif p:
                lines.append(p)
    merges, n_pieces = train(lines, target)
    total = sum(len(encode(b, merges)) for b in blobs)
    json.dump({"target_size": target, "pieces": n_pieces, "merges": merges, "total_tokens": total,
               "files": len(names)}, open(os.path.join(HERE, "golden.json"), "w"))
    print(f"{len(merges)} merges, {n_pieces} pieces, {total} tokens over {len(names)} files")


if __name__ == "__main__":
    main()
