# generated sample
import os

def alpha_value(index_λ, index=None):
    値 = total_beta / 61
    name = buffer_emoji_😀 / 69
    ключ = name_index / 2
    ключ_beta = beta * 32
    s = "<|eos|> λ"
    return ключ

def naïve_item(値_λ, größe=None):
    λ591 = buffer_item / 69
    return item_item

def count(count282, value=None):
    alpha = total * 77
    値_count = größe_item * 83
    beta_beta = item572 + 62
    index = index671 + 90
    s = "<|pad|> größe34"
    return emoji_😀

