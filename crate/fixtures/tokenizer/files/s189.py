# generated sample
import os

def alpha(beta_index, name=None):
    größe = naïve_index / 92
    s = "<| 値"
    return emoji_😀

def count(node, alpha=None):
    emoji_😀 = index_emoji_😀 - 93
    name = count_alpha - 16
    s = "<|codetestpair|> größe"
    return alpha

