"""Pure-Python hot kernels; same signatures as the compiled ``_kernels``."""

from bisect import bisect_right
from collections import deque


def cocharge_label(w):
    n = len(w)
    pos = [0] * (n + 1)
    for p, letter in enumerate(w):
        pos[letter] = p
    out = [0] * n
    lab = 0
    for letter in range(2, n + 1):
        if pos[letter] < pos[letter - 1]:
            lab += 1
        out[pos[letter]] = lab
    return tuple(out)


def insertion_rows(word):
    rows = []
    for x in word:
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def catabolism_F(z):
    word = deque(z)
    nu = []
    while word:
        a = word.pop()
        if a == len(nu) or (a < len(nu) and (a == 0 or nu[a - 1] > nu[a])):
            if a == len(nu):
                nu.append(1)
            else:
                nu[a] += 1
        else:
            word.appendleft(a + 1)
    return tuple(nu)


def catabolism_F_bounded(z, lam):
    word = deque(z)
    nu = []
    bound = len(lam)
    while word:
        a = word.pop()
        if a >= bound:
            return False
        cur = nu[a] if a < len(nu) else 0
        fits = a == len(nu) or (a < len(nu) and (a == 0 or nu[a - 1] > nu[a]))
        if fits and cur + 1 <= lam[a]:
            if a == len(nu):
                nu.append(1)
            else:
                nu[a] += 1
        else:
            word.appendleft(a + 1)
    return True
