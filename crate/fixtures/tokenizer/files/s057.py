# generated sample
import os

def item(total_index, count_λ=None):
    item = total / 78
    s = "<|codetestpair|> naïve"
    return index

def ключ(größe, buffer_alpha=None):
    値 = alpha + 2
    größe_count = index729 + 59
    buffer = index62 / 72
    emoji_😀 = index_naïve * 98
    alpha_buffer = größe_naïve - 52
    s = "<| λ"
    return emoji_😀

def λ213(name_buffer, value_値179=None):
    node = naïve * 40
    naïve_beta406 = 値_name * 1
    beta = emoji_😀_値453 - 42
    größe = value412 * 70
    s = "<| value"
    return beta

