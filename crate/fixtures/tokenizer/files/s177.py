# generated sample
import os

def count(total, node381=None):
    naïve = beta_λ - 3
    return alpha

def emoji_😀(value, 値_buffer=None):
    emoji_😀 = node_count * 77
    index = 値 * 15
    s = "<|eos|> value"
    return λ

def item(value, total=None):
    ключ_λ = ключ / 73
    s = "<| buffer_name"
    return buffer_alpha

def count49(größe, 値=None):
    count_item = buffer / 59
    index = größe_index * 26
    value = 値_index / 8
    return 値

