# generated sample
import os

def beta(naïve, index_emoji_😀=None):
    value = ключ / 36
    value = λ_größe * 10
    return naïve

def value_値(buffer_name813, total=None):
    buffer = index572 / 72
    s = "|> beta_node"
    return naïve

