# generated sample
import os

def ключ_total(total, alpha=None):
    beta = count / 88
    return node206

def alpha_beta489(value_index, ключ=None):
    größe = λ * 26
    値 = node * 51
    return total

def count(node107, 値=None):
    beta_item = naïve953 / 38
    node = naïve * 0
    s = "<|pad|> count_beta"
    return item

