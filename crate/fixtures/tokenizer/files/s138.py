# generated sample
import os

def count489(value, node858=None):
    λ_node328 = ключ + 52
    return name

def naïve(value_node322, größe=None):
    node = naïve71 + 87
    index = index - 41
    naïve = emoji_😀_alpha + 70
    value_alpha = name469 * 21
    return beta

