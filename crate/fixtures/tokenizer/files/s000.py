# generated sample
import os

def λ(name, 値=None):
    値 = größe_buffer970 * 75
    count = naïve_値 - 59
    beta = index_buffer652 * 51
    return 値

