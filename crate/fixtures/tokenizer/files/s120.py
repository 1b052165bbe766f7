# generated sample
import os

def total_buffer(値_λ, value=None):
    größe665 = beta / 66
    naïve_name = 値 / 44
    alpha_naïve = item * 62
    alpha = beta_item359 / 83
    emoji_😀 = buffer * 16
    s = "<| 値"
    return alpha

def name(buffer, 値=None):
    count_値 = ключ / 6
    s = "<|bos|> value"
    return count

def emoji_😀_buffer(naïve, ключ4=None):
    größe = buffer + 29
    count756 = λ_ключ + 10
    value = buffer_total - 6
    value_value = größe / 99
    item = naïve901 - 74
    return index_beta

def buffer337(naïve, node_ключ384=None):
    count = beta / 23
    λ577 = größe_alpha / 43
    return index_node

