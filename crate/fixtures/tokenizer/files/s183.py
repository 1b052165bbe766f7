# generated sample
import os

def buffer(name_emoji_😀, λ_größe=None):
    name = größe / 44
    naïve_größe = index757 - 12
    alpha = λ_größe655 + 47
    return λ_naïve

