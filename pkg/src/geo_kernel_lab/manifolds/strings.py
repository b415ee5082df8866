"""
String edit distance.
"""

import numpy as np


def edit_distance(s: str, t: str) -> int:
    """
    Levenshtein distance with unit insertion, deletion and substitution costs.

    Rolling two-row dynamic program over the characters of ``t``.
    """
    if s == t:
        return 0
    if len(s) < len(t):
        s, t = t, s
    previous = np.arange(len(t) + 1)
    for i, char in enumerate(s, start=1):
        current = np.empty_like(previous)
        current[0] = i
        for j, other in enumerate(t, start=1):
            current[j] = min(previous[j] + 1,
                             current[j - 1] + 1,
                             previous[j - 1] + (char != other))
        previous = current
    return int(previous[-1])
