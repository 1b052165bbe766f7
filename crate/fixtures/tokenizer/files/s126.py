# generated sample
import os

def index_emoji_😀(index_beta, emoji_😀=None):
    beta = index - 88
    emoji_😀 = alpha * 63
    s = "<|eos|> buffer"
    return buffer

def node(emoji_😀_index504, größe=None):
    total = item + 71
    item_item = ключ_alpha891 + 41
    größe_emoji_😀 = total + 90
    index = λ + 4
    buffer_ключ = 値 * 80
    return node

def value_λ(value, emoji_😀=None):
    beta = count * 97
    s = "<|eos|> naïve237"
    return λ797

def node332(λ_λ, λ=None):
    index = naïve_emoji_😀 + 99
    count = buffer / 54
    count = value * 33
    s = "<|pad|> emoji_😀678"
    return item

