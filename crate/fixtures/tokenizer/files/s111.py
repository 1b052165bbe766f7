# generated sample
import os

def 値(name_naïve, node=None):
    値_beta = index568 + 36
    item = item * 38
    値638 = total_total664 * 34
    naïve_value128 = emoji_😀 - 8
    naïve = count * 50
    s = "<|codetestpair|> total"
    return 値

def total_größe(値_naïve, node=None):
    count587 = größe850 - 6
    item = index_alpha - 67
    値_ключ = value * 80
    count454 = naïve_index * 39
    return count

def naïve_index(値, beta=None):
    item928 = name_index - 55
    s = "<|bos|> λ"
    return beta_total

