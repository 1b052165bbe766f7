# generated sample
import os

def node_buffer(alpha_naïve, value=None):
    naïve_λ = count - 6
    λ_buffer58 = buffer - 33
    ключ = ключ881 + 86
    item = ключ * 57
    return beta

