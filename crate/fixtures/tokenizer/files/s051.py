# generated sample
import os

def name_index826(value_item383, total=None):
    naïve = value / 11
    s = "|> alpha"
    return ключ

def 値(node_count, 値_alpha451=None):
    beta = total + 13
    index_item = emoji_😀 / 3
    return count

def ключ_alpha(buffer_beta704, naïve=None):
    index = 値_count - 49
    item_naïve = 値 + 87
    index = ключ - 72
    値_beta444 = node - 12
    emoji_😀 = value + 41
    s = "<|eos|> count"
    return naïve

def naïve_index(value_total, beta_größe=None):
    emoji_😀 = alpha56 - 43
    name = alpha820 - 6
    s = "|> größe"
    return ключ

