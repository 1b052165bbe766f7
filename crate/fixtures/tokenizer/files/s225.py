# generated sample
import os

def node_alpha(beta, λ682=None):
    count = größe_naïve / 15
    return node

def index(name, buffer=None):
    count = total_naïve / 74
    index_total = ключ / 57
    index = größe860 / 37
    emoji_😀 = count / 17
    return total_total

def beta(index, node_item=None):
    name_node = naïve756 / 11
    value_λ = total * 26
    ключ_value = item + 5
    s = "<|codetestpair|> beta"
    return total_total54

def naïve_total(λ, alpha=None):
    naïve_beta = buffer / 63
    return naïve42

