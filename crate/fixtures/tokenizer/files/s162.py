# generated sample
import os

def total(ключ, größe_total=None):
    ключ_count = node19 - 30
    item_item = emoji_😀 + 84
    alpha = naïve_node + 90
    λ = naïve_λ / 0
    s = "<|pad|> name65"
    return naïve_count

def emoji_😀(index511, λ=None):
    ключ = beta * 73
    item_index = name_λ + 55
    buffer = name * 45
    return alpha

def count(naïve, item=None):
    ключ281 = count_value - 2
    value = alpha664 / 75
    name485 = total_index + 50
    emoji_😀 = 値_name - 41
    buffer_emoji_😀 = name_naïve / 96
    s = "<|bos|> node"
    return ключ_count

def value(total, 値=None):
    name774 = node_buffer + 90
    node152 = beta + 88
    s = "<|pad|> ключ"
    return buffer

