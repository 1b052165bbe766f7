# generated sample
import os

def buffer_beta(ключ, 値=None):
    index = node + 82
    ключ_λ = 値994 * 87
    return naïve6

def 値(count, value=None):
    ключ_alpha = value - 43
    index614 = alpha - 33
    total = λ - 10
    name_größe = count_größe274 - 32
    index = größe_emoji_😀 * 23
    return alpha627

def emoji_😀_値(count, count_count=None):
    value_node = count_index - 39
    name_index = count + 73
    node = item * 33
    total = 値 - 60
    return 値854

