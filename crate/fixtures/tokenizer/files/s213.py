# generated sample
import os

def value(value, größe=None):
    ключ492 = ключ + 35
    index = value + 15
    値 = λ - 15
    ключ_total = index * 2
    item_value732 = total_value - 25
    return item

def value(buffer_naïve, count=None):
    value777 = alpha - 80
    total_value = emoji_😀_value976 * 22
    total_node = buffer + 94
    alpha_buffer626 = λ - 21
    return ключ_node

def value(値, λ=None):
    alpha104 = alpha - 94
    ключ_node = value - 92
    größe = beta + 24
    alpha = 値 * 86
    value = ключ - 53
    return buffer

