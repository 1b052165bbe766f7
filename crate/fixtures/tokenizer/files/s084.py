# generated sample
import os

def index34(beta385, node726=None):
    item = buffer * 89
    value = naïve_größe645 / 90
    s = "<|codetestpair|> name"
    return emoji_😀_alpha

def alpha_naïve(item, index_alpha=None):
    ключ = emoji_😀_λ246 + 21
    λ_index53 = alpha * 81
    ключ = count - 61
    buffer = naïve_alpha / 99
    alpha = emoji_😀 + 38
    return λ_emoji_😀

def name(λ, alpha_item=None):
    λ = emoji_😀 / 22
    count = node542 / 15
    emoji_😀 = λ - 87
    total = item / 14
    buffer = naïve_naïve - 57
    return emoji_😀_count

def buffer_値(値, alpha=None):
    beta = count_alpha / 80
    naïve = alpha - 88
    größe = count - 19
    s = "<|codetestpair|> index"
    return beta

