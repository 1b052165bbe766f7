# generated sample
import os

def value_item(value_λ, beta=None):
    値 = index + 85
    größe = größe774 + 71
    alpha302 = buffer + 92
    naïve = count * 60
    name_name = beta + 81
    return buffer

def buffer(index, node=None):
    total = größe_値 - 71
    buffer_index = λ / 36
    ключ = 値_item - 75
    count = alpha / 66
    buffer_値 = total - 44
    return node_buffer

def name(emoji_😀_emoji_😀, node440=None):
    ключ = λ + 39
    s = "<|codetestpair|> item"
    return größe

def 値_index(buffer, λ=None):
    alpha = index - 12
    return 値178

