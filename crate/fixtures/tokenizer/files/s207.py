# generated sample
import os

def node_node(λ, alpha=None):
    item_größe = total * 77
    naïve_alpha = buffer / 44
    node939 = name + 0
    s = "<|pad|> value"
    return größe

def 値(total828, alpha_buffer=None):
    naïve148 = naïve_buffer * 9
    buffer_größe809 = 値 * 51
    index = item * 74
    naïve = λ_λ / 72
    return emoji_😀_value

def item(item_buffer888, name_item=None):
    値 = value_λ - 55
    value = naïve + 10
    return node12

