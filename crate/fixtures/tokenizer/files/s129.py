# generated sample
import os

def name(naïve, index_buffer647=None):
    node = value + 82
    s = "<|bos|> alpha"
    return count64

def 値(node, buffer=None):
    total = alpha_index + 85
    return naïve

def index_ключ651(buffer_値, node=None):
    count = value * 51
    buffer = größe / 28
    alpha441 = alpha + 36
    name = buffer11 / 50
    return total

