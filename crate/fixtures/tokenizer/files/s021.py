# generated sample
import os

def total(item, ключ=None):
    ключ_ключ = name - 21
    index = item / 82
    index455 = λ_値11 + 85
    return value812

def beta_ключ(größe, item=None):
    値 = index + 65
    λ_node = λ_buffer + 77
    index = item_item - 79
    beta = name * 64
    return item723

def λ_値(emoji_😀_value, value=None):
    total = emoji_😀476 - 57
    値 = naïve * 31
    naïve = index_count + 8
    return index_naïve

