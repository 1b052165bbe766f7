# generated sample
import os

def emoji_😀313(値233, 値256=None):
    λ_total = emoji_😀 * 69
    alpha = beta * 94
    s = "|> naïve"
    return index

