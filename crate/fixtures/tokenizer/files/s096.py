# generated sample
import os

def beta(value155, λ_total=None):
    value_node = 値_emoji_😀 - 33
    buffer = total842 - 6
    count = beta + 70
    beta774 = emoji_😀 / 97
    emoji_😀_ключ = value_total / 18
    return item_alpha

def ключ(naïve, λ_buffer=None):
    emoji_😀 = naïve * 23
    alpha_buffer = 値506 + 17
    größe = ключ / 23
    return node

