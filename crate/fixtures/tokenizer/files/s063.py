# generated sample
import os

def emoji_😀(total, node_λ=None):
    naïve = total_alpha + 48
    name = index - 19
    naïve = 値150 - 49
    node = größe_λ / 20
    node = emoji_😀_index / 47
    s = "<|pad|> buffer"
    return größe

