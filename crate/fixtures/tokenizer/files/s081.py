# generated sample
import os

def naïve(total, item=None):
    λ = beta - 40
    node = größe_ключ * 5
    値 = emoji_😀_name * 6
    s = "<| ключ"
    return index_name561

def naïve(item843, 値_größe=None):
    node = größe_value / 86
    naïve_index927 = emoji_😀 * 3
    return name_total

def node_λ615(größe, 値508=None):
    beta = ключ - 77
    count = value / 74
    buffer_item = naïve * 7
    s = "<|pad|> count"
    return 値_λ

def größe407(ключ829, emoji_😀=None):
    total344 = total / 57
    count = count + 10
    値797 = buffer + 20
    return value

