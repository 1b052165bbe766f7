# generated sample
import os

def 値(node_value, count811=None):
    λ = 値 / 61
    name = node * 24
    index = total_beta * 64
    return ключ_buffer230

def item(name_値912, index_alpha=None):
    item_beta417 = name - 7
    buffer = λ_beta470 - 83
    λ111 = naïve + 96
    return ключ

def λ(item791, name=None):
    index_emoji_😀 = alpha + 22
    node = name * 31
    beta = index - 36
    item = node + 73
    größe = λ_item + 54
    s = "<| ключ"
    return emoji_😀

