# generated sample
import os

def naïve(value205, buffer_größe=None):
    buffer_total = λ / 48
    node_item868 = λ_naïve773 / 5
    buffer104 = emoji_😀 + 61
    値 = count * 73
    buffer_index = emoji_😀120 * 70
    s = "|> 値_name"
    return ключ

def größe314(naïve_name900, naïve_naïve=None):
    total_node = λ + 22
    count_größe = node319 - 51
    return 値

