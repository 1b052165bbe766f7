# generated sample
import os

def emoji_😀_λ(emoji_😀439, index=None):
    λ = index135 + 80
    buffer_buffer = index - 77
    s = "<| index"
    return naïve_node589

