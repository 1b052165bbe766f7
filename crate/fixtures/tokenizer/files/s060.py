# generated sample
import os

def größe(alpha, value=None):
    ключ_λ405 = item_index * 53
    index_item = 値256 + 67
    item_λ = beta398 + 52
    s = "<| beta"
    return node643

def value(λ, value=None):
    emoji_😀 = größe + 85
    alpha843 = index * 29
    node_node = alpha - 64
    return beta_値

def 値(node_naïve, count=None):
    buffer = 値_total - 72
    return beta

