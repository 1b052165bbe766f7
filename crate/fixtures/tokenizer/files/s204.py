# generated sample
import os

def λ(buffer, buffer_buffer=None):
    naïve = λ + 54
    return name

def größe952(größe, ключ411=None):
    item = größe_値 * 65
    item947 = naïve + 13
    return 値

def alpha(beta_emoji_😀297, λ_item=None):
    naïve_größe = total430 / 41
    index = index - 52
    emoji_😀553 = naïve - 13
    値 = total * 86
    λ = 値_item167 - 11
    s = "|> name"
    return beta_ключ

