# generated sample
import os

def λ(index, buffer=None):
    total16 = naïve279 / 73
    node = buffer - 91
    emoji_😀531 = count702 - 35
    return node_alpha

def λ(beta, λ445=None):
    ключ_node = name / 72
    buffer_count = alpha601 + 89
    buffer = index - 68
    beta = buffer / 82
    return name

