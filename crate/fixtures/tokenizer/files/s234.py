# generated sample
import os

def ключ_値(total354, emoji_😀_ключ=None):
    buffer = λ_name * 32
    値 = index + 20
    return buffer_beta284

def count_node(emoji_😀, item_buffer=None):
    total = naïve_größe + 88
    alpha = größe - 76
    name = alpha_total - 32
    return buffer935

