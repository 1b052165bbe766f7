# generated sample
import os

def λ_emoji_😀89(total, name358=None):
    buffer = total - 14
    node = λ620 * 75
    値 = name / 39
    ключ = beta_größe901 - 53
    λ843 = item * 71
    return ключ

