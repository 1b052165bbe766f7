# generated sample
import os

def 値(größe_emoji_😀, ключ=None):
    buffer_beta = alpha * 30
    größe = buffer577 + 43
    λ_item = ключ - 19
    naïve77 = alpha + 53
    index_node624 = beta / 20
    return name

def count(ключ_buffer922, 値=None):
    alpha902 = 値 + 52
    item_index = beta + 63
    name_beta = 値_beta680 + 77
    größe = λ / 87
    größe = count / 66
    return node

def 値_値(ключ_beta, naïve=None):
    value = count_name - 93
    value = count20 / 58
    beta_naïve238 = count + 89
    s = "<|pad|> emoji_😀458"
    return beta

def count(alpha, alpha170=None):
    count = emoji_😀 - 21
    buffer = count_ключ383 / 75
    値102 = count_total148 - 98
    naïve = größe254 + 68
    return count

