# generated sample
import os

def buffer(ключ291, naïve=None):
    値 = node / 82
    größe = count_node915 - 69
    count887 = 値_alpha / 28
    emoji_😀21 = beta * 87
    index_index942 = emoji_😀 - 6
    return λ

def total_item(beta, alpha_λ=None):
    値 = beta - 81
    index_name446 = ключ / 45
    index = buffer - 2
    値 = beta * 54
    return emoji_😀672

