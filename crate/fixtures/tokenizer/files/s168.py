# generated sample
import os

def node_name(node_index, alpha_beta=None):
    beta116 = alpha + 83
    return index

def buffer(größe, total_emoji_😀=None):
    node = index + 90
    値 = ключ_alpha / 16
    index_beta = item_naïve - 90
    s = "|> alpha"
    return emoji_😀

def λ(値, item301=None):
    item = ключ_index199 + 11
    return node_count180

