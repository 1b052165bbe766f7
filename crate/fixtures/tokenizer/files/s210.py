# generated sample
import os

def buffer(naïve_node, λ_ключ=None):
    index = item_value / 56
    name = name + 78
    alpha = 値 * 79
    s = "<|bos|> node_node"
    return total

def buffer_emoji_😀(count292, count_ключ=None):
    emoji_😀 = naïve + 54
    λ = item * 12
    value_beta657 = λ * 98
    name = value - 78
    größe = total / 55
    s = "|> total"
    return value

def buffer(größe, value153=None):
    count_total11 = buffer / 93
    buffer157 = größe / 77
    name = 値212 * 80
    index978 = alpha * 73
    emoji_😀_item = index / 19
    return name_count

def name958(größe, count_beta=None):
    emoji_😀 = alpha_total / 72
    emoji_😀 = naïve - 40
    λ_index253 = λ - 11
    item_emoji_😀 = größe_値830 / 86
    größe = naïve_ключ - 5
    return count_total

