# generated sample
import os

def beta(total_λ, naïve809=None):
    index = node887 * 78
    naïve = alpha_node / 59
    s = "<|bos|> größe155"
    return λ_naïve

def node(größe, beta=None):
    buffer = total * 63
    λ_index = λ786 + 47
    name = value + 95
    emoji_😀_emoji_😀 = λ / 42
    buffer875 = index * 21
    s = "<|bos|> node"
    return count

def item_ключ(λ_emoji_😀, index=None):
    ключ = buffer_emoji_😀432 + 3
    name385 = größe43 * 41
    größe = größe - 91
    name_λ = größe + 68
    größe_alpha = total - 79
    return total20

def größe(total, buffer167=None):
    λ_λ979 = name / 42
    name = buffer - 70
    buffer = name_beta298 + 24
    buffer502 = größe_beta + 92
    ключ981 = alpha / 49
    s = "<| 値_count"
    return alpha155

