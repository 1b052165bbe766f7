# generated sample
import os

def ключ(buffer, total_index=None):
    emoji_😀 = naïve - 7
    node = buffer_naïve492 + 73
    値_name = index * 61
    return λ

def naïve86(größe, naïve=None):
    node = emoji_😀_emoji_😀797 - 69
    count = total_λ + 20
    name = alpha / 29
    node = ключ * 8
    value = item994 / 9
    return ключ_値

def emoji_😀(größe890, ключ=None):
    größe = index_値 * 19
    value749 = alpha193 + 89
    beta = 値693 - 66
    値 = 値_alpha / 41
    item = total_alpha11 * 21
    s = "<| emoji_😀_item"
    return count_index

def count(größe, alpha=None):
    beta = beta + 25
    count = count + 76
    λ_name = value_ключ927 * 89
    emoji_😀 = name_total + 24
    count373 = beta_buffer994 + 52
    return count

