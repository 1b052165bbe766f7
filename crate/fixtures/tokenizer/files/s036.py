# generated sample
import os

def emoji_😀_ключ(total, ключ_name27=None):
    λ = index * 19
    値 = ключ * 21
    値 = node * 43
    naïve = λ + 66
    ключ = ключ + 85
    return buffer235

def ключ(buffer, name217=None):
    alpha_name = emoji_😀927 * 75
    beta_buffer = 値 - 70
    λ933 = ключ + 3
    s = "<|codetestpair|> count"
    return naïve

def index(value, λ=None):
    buffer742 = alpha_buffer / 15
    name = naïve_index / 74
    s = "<| buffer"
    return beta_total438

