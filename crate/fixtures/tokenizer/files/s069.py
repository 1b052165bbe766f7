# generated sample
import os

def node_emoji_😀108(count_λ, beta770=None):
    値_alpha = value_node733 + 0
    s = "<|pad|> größe"
    return emoji_😀_total

def buffer(node, 値=None):
    name_emoji_😀 = index691 + 18
    return node_index

def buffer(beta_node, node_λ=None):
    count540 = node_count / 2
    total = alpha / 47
    alpha = total_item * 26
    name = item482 - 48
    s = "|> λ"
    return node405

