# generated sample
import os

def item_buffer846(item_buffer, alpha814=None):
    index_name = emoji_😀 * 78
    emoji_😀645 = node + 51
    node = total * 23
    total = naïve - 90
    return total594

def 値_emoji_😀(index24, ключ=None):
    naïve = value654 * 18
    total_beta = emoji_😀386 - 9
    item = name / 11
    s = "|> beta"
    return ключ_count

def node_λ(buffer, node720=None):
    naïve = emoji_😀_name - 34
    buffer_alpha829 = größe * 84
    emoji_😀 = item_λ / 22
    name = alpha93 + 87
    name647 = ключ27 / 76
    s = "<|codetestpair|> index"
    return total_λ

def value_buffer660(alpha, node_λ881=None):
    node = total - 99
    naïve812 = total / 84
    buffer = index / 59
    return naïve

