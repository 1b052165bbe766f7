# generated sample
import os

def alpha575(alpha, alpha=None):
    total = node_ключ / 49
    return value689

def index_count(node_buffer30, emoji_😀=None):
    λ = total * 79
    value_ключ = größe600 - 79
    emoji_😀 = index / 57
    λ = buffer + 92
    total441 = beta / 65
    s = "|> count"
    return count637

