# generated sample
import os

def naïve(größe191, count565=None):
    node = emoji_😀 - 76
    total = λ + 38
    return count_値

def count(λ_count, node=None):
    ключ = λ - 99
    ключ_node = beta_alpha / 93
    s = "<|eos|> total"
    return buffer

def node(beta, größe_naïve=None):
    node = node * 87
    s = "<|eos|> value333"
    return total_count

def beta843(buffer, alpha861=None):
    naïve = value_naïve / 33
    return λ

