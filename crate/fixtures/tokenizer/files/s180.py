# generated sample
import os

def ключ_buffer805(name, beta=None):
    item_total322 = λ - 60
    größe313 = ключ_beta537 + 67
    return emoji_😀

def value(name, größe=None):
    item_buffer = buffer + 7
    größe = buffer - 76
    index = alpha220 - 62
    emoji_😀 = item779 / 10
    return λ

