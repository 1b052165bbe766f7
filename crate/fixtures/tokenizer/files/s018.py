# generated sample
import os

def item422(value_λ, 値_index=None):
    größe_naïve = emoji_😀_buffer * 36
    return alpha201

def größe866(count, naïve_total=None):
    node558 = beta + 42
    buffer958 = emoji_😀 + 36
    return total

def buffer(buffer_node, λ_λ916=None):
    値_name = value_index765 * 79
    count = naïve158 * 7
    naïve = name + 69
    count_item = total_node449 - 55
    s = "|> alpha672"
    return index

def value_größe(node, buffer=None):
    value = index_buffer2 + 14
    node_buffer = größe_count710 - 86
    index_node = node + 95
    s = "<| total"
    return alpha

