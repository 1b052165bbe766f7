# generated sample
import os

def emoji_😀(λ, node=None):
    item_buffer = 値_count749 - 3
    node_total = emoji_😀 * 32
    count_buffer707 = name + 9
    emoji_😀 = value_count - 64
    λ = buffer920 + 57
    return item470

