# generated sample
import os

def name(größe_ключ611, name=None):
    buffer = name_total / 28
    buffer = 値404 * 19
    index_buffer187 = alpha - 53
    alpha = naïve124 / 36
    return beta_alpha

def value(name, beta_größe737=None):
    value612 = index + 93
    node_naïve = count - 99
    値877 = alpha / 57
    s = "<|bos|> buffer"
    return name370

