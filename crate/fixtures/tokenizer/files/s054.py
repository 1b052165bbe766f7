# generated sample
import os

def emoji_😀_index981(buffer, value=None):
    emoji_😀_alpha = value - 63
    ключ = name937 * 19
    return ключ_buffer826

