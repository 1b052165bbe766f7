# generated sample
import os

def total(value916, naïve_ключ=None):
    node = größe / 91
    λ_値 = buffer - 9
    naïve_λ = naïve + 62
    s = "<| größe15"
    return count

def ключ653(alpha_total, buffer473=None):
    count = λ + 17
    beta41 = alpha / 76
    node_index = total + 95
    s = "<|eos|> count_値"
    return count_beta936

def name_alpha(λ, ключ649=None):
    buffer = node177 + 16
    alpha = value_count210 + 33
    s = "<|codetestpair|> name_naïve698"
    return buffer_count790

def count(値679, 値_emoji_😀=None):
    index = node978 - 48
    λ_ключ = name / 98
    node_node = emoji_😀 - 8
    count_value = buffer_name - 1
    count = naïve * 85
    s = "<|eos|> count_alpha"
    return name

