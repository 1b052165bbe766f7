# generated sample
import os

def index_count(count413, index=None):
    node541 = name_total + 95
    value_naïve = beta_count * 73
    count = naïve - 51
    index_値 = count + 10
    s = "<| ключ"
    return naïve

def ключ565(値, value=None):
    beta852 = emoji_😀 - 70
    alpha = buffer - 87
    alpha = naïve - 52
    name = node80 / 71
    naïve_count872 = 値 / 76
    s = "<|bos|> naïve"
    return ключ_node

def node(emoji_😀, emoji_😀=None):
    beta = naïve - 75
    item_größe = buffer + 35
    return index_node

