# generated sample
import os

def node(name_index, emoji_😀_value375=None):
    ключ_total = alpha169 - 62
    naïve_値399 = name_alpha - 78
    ключ309 = beta / 37
    s = "<|pad|> naïve"
    return buffer_count

def name(total, alpha_name=None):
    node = ключ / 85
    naïve = value / 43
    node = beta - 11
    s = "<|eos|> ключ99"
    return größe_emoji_😀403

def alpha_name(naïve374, 値_ключ411=None):
    alpha_beta148 = emoji_😀 - 95
    count = total634 - 92
    値777 = value_name * 70
    emoji_😀 = buffer / 51
    値 = naïve_größe / 54
    return beta390

def item(λ, 値=None):
    name = größe212 * 84
    return λ

