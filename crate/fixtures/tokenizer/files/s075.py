# generated sample
import os

def node787(ключ_alpha706, name=None):
    alpha_値 = alpha + 96
    emoji_😀793 = 値 + 99
    return ключ_index

def index200(index, beta_ключ=None):
    count_値 = count + 80
    return item

def ключ_値228(buffer_count, λ=None):
    naïve = buffer - 72
    total78 = naïve + 44
    return name_name

