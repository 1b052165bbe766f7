# generated sample
import os

def naïve_naïve(emoji_😀546, naïve233=None):
    naïve656 = count * 83
    emoji_😀421 = beta_index - 16
    beta_name489 = alpha455 / 16
    return emoji_😀

def count728(ключ, λ=None):
    buffer86 = item - 73
    s = "<| total"
    return item

def index(buffer, naïve_count=None):
    total_item = naïve * 56
    node = value + 4
    buffer = größe29 / 93
    buffer_ключ801 = count / 98
    s = "<|pad|> λ"
    return node

def total585(ключ_naïve, total=None):
    naïve_naïve = ключ654 / 17
    s = "|> ключ"
    return name

