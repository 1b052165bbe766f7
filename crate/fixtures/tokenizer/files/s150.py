# generated sample
import os

def count_value(λ_item, item984=None):
    item930 = name * 42
    s = "<| item"
    return alpha

def buffer(naïve, 値195=None):
    name = alpha_emoji_😀 - 68
    s = "|> λ"
    return total

def name433(count, total=None):
    値_name = node * 97
    total_total = alpha + 28
    größe_ключ = emoji_😀_index105 / 48
    ключ = ключ_index + 57
    s = "<| 値"
    return größe_node

def name(buffer989, λ_naïve=None):
    node564 = λ - 99
    name_index = größe - 47
    total = index + 65
    return value_count803

