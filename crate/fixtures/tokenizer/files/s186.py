# generated sample
import os

def beta_naïve(index730, index_total=None):
    total890 = emoji_😀 / 84
    値 = total + 2
    return größe_beta

def 値_emoji_😀(item_alpha, alpha=None):
    beta = naïve + 66
    emoji_😀 = 値938 - 9
    emoji_😀 = größe - 11
    return value_index

