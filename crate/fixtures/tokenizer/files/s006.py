# generated sample
import os

def ключ_値(buffer, node=None):
    naïve = ключ_größe795 / 76
    beta537 = naïve + 76
    count = count_count / 56
    naïve = größe421 * 79
    größe = total914 - 21
    return item632

def größe_item(ключ_ключ144, buffer=None):
    ключ_item = alpha - 82
    value_value = index + 35
    node_naïve = item_naïve / 85
    s = "<|pad|> 値"
    return emoji_😀

def alpha(count, count_beta784=None):
    buffer27 = name * 79
    ключ = index - 35
    s = "<| item466"
    return naïve

