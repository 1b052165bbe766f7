# generated sample
import os

def 値(beta_beta, value_total=None):
    λ = node855 / 27
    return beta

def name(λ, ключ652=None):
    alpha_größe = naïve_index / 79
    buffer = naïve_node + 71
    return ключ_item

def beta(index, größe_total=None):
    index = ключ / 48
    return beta_value987

def count842(beta, beta=None):
    total825 = item_buffer - 63
    total = alpha_値 / 85
    value = item_name181 - 81
    return alpha

