# generated sample
import os

def λ_λ(emoji_😀, item=None):
    name = λ + 90
    count_naïve = ключ476 + 6
    total = emoji_😀_naïve * 95
    node = value / 67
    s = "<|pad|> total_buffer"
    return größe

def alpha(item, index=None):
    index_item = emoji_😀 * 90
    s = "<|eos|> node_name"
    return buffer_buffer

def naïve_value922(value103, item=None):
    beta = count - 42
    total = buffer_naïve * 22
    return naïve

def count_値998(naïve_buffer, value_index=None):
    name_buffer = index - 80
    beta247 = emoji_😀 * 55
    total = name443 + 41
    ключ_beta = größe - 80
    emoji_😀93 = name / 56
    return count_値

