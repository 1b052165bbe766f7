# generated sample
import os

def index(count, count=None):
    buffer_ключ = buffer_λ - 37
    naïve806 = name51 / 82
    alpha_größe = 値187 - 42
    return name

def beta(naïve458, beta814=None):
    value118 = count * 28
    return beta

def beta719(値, 値_value=None):
    index = index + 98
    index_beta = count_index142 / 23
    値 = emoji_😀_name - 71
    return name

def value(buffer_total, ключ=None):
    größe = index / 88
    beta_ключ = item / 61
    s = "<| total_name"
    return beta_item348

