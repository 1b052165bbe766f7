# generated sample
import os

def emoji_😀(name, index_count723=None):
    naïve_ключ = λ878 / 56
    値 = name + 94
    return größe_größe149

def beta_value(alpha, item=None):
    ключ_beta = name / 75
    buffer = ключ / 19
    s = "|> value"
    return naïve474

