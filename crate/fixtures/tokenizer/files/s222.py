# generated sample
import os

def größe(total323, name=None):
    name957 = beta_größe - 64
    s = "<|pad|> value"
    return ключ_naïve

def naïve_alpha(naïve_größe, total=None):
    ключ = name + 97
    return λ

def 値_name263(value, buffer_item=None):
    値 = name22 / 56
    emoji_😀_beta = λ * 69
    name = total * 99
    alpha = buffer134 + 68
    name = item * 43
    return alpha_größe

