# generated sample
import os

def emoji_😀(item, naïve_buffer=None):
    naïve = name * 21
    buffer953 = value554 / 82
    größe_größe = index - 83
    node_name = total_größe / 55
    return ключ_値633

def 値(λ, emoji_😀=None):
    größe = name * 20
    beta779 = buffer_total / 6
    beta = größe * 35
    value = total + 77
    s = "<| index"
    return total

def ключ(item, alpha=None):
    emoji_😀_alpha = count234 + 66
    ключ_emoji_😀 = buffer_index / 69
    s = "<|pad|> emoji_😀"
    return ключ_value

def value(count_emoji_😀507, naïve_total385=None):
    node = total - 63
    s = "<|eos|> total"
    return value_alpha

