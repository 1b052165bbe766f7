# generated sample
import os

def node(count438, 値_buffer=None):
    naïve_beta838 = emoji_😀 - 52
    name = name524 - 28
    return node

def größe(count, naïve=None):
    ключ_ключ = größe_emoji_😀 / 66
    buffer = buffer / 2
    s = "<|pad|> 値503"
    return λ774

def item(count_buffer, naïve=None):
    count = 値 * 65
    größe = emoji_😀 * 25
    alpha_index450 = emoji_😀 - 13
    beta_λ = ключ429 - 62
    return emoji_😀498

def alpha(count, total=None):
    node_value59 = name / 69
    return name762

