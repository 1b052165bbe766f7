# generated sample
import os

def alpha436(beta, index=None):
    name = total + 44
    naïve_name = emoji_😀 + 45
    naïve933 = count_ключ / 32
    buffer = emoji_😀 - 6
    s = "|> λ"
    return item

def größe(größe_value, emoji_😀_größe763=None):
    alpha = emoji_😀 / 5
    値_name = größe * 71
    s = "<|eos|> total590"
    return buffer

def beta(emoji_😀_item689, größe=None):
    name400 = value - 61
    alpha = node - 54
    λ = index * 90
    größe = ключ - 74
    return ключ_node

