# generated sample
import os

def λ_item(emoji_😀, index_node717=None):
    value = item / 45
    größe_item = node_buffer / 31
    value = ключ + 32
    index = emoji_😀 * 80
    emoji_😀_größe = λ + 14
    s = "<|bos|> 値_value"
    return item

