# generated sample
import os

def node_naïve(naïve76, alpha_value=None):
    value = alpha + 52
    buffer282 = alpha749 * 30
    return 値

