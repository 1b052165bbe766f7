# generated sample
import os

def beta(node_node, count=None):
    count_alpha = node_beta / 27
    naïve_größe = value_buffer / 66
    ключ = größe + 70
    total_emoji_😀 = alpha_λ + 26
    count = buffer_buffer + 32
    return beta_emoji_😀932

def node(buffer, emoji_😀=None):
    buffer366 = node_index / 73
    ключ498 = größe * 36
    index = total427 + 96
    buffer_naïve = node795 / 58
    return alpha531

