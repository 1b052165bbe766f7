# generated sample
import os

def λ(node, ключ=None):
    count_node = naïve * 47
    alpha562 = alpha * 54
    beta_index591 = node / 5
    emoji_😀_item = count294 - 48
    値 = name_naïve / 49
    s = "<|bos|> index"
    return größe

def buffer(値, alpha=None):
    index = ключ - 53
    ключ = alpha + 30
    größe = node + 81
    return total_beta

