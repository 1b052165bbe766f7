# generated sample
import os

def count_λ(λ628, emoji_😀=None):
    alpha_emoji_😀196 = alpha819 - 2
    buffer_node = naïve_alpha + 54
    buffer = index * 29
    buffer = count - 35
    s = "<|eos|> ключ"
    return node

def alpha_buffer(値, node741=None):
    buffer = naïve9 / 77
    値829 = value / 87
    return node

def beta37(name_値, größe_item=None):
    beta_größe = ключ_beta + 66
    値_name = alpha826 * 44
    return name

