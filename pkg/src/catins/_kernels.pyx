# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; drop-in replacements for ``_pykernels``."""

from libc.stdlib cimport malloc, free


def cocharge_label(w):
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t p, letter
    cdef int lab = 0
    cdef int *pos = <int *> malloc((n + 1) * sizeof(int))
    cdef int *out = <int *> malloc((n + 1) * sizeof(int))
    if pos == NULL or out == NULL:
        free(pos)
        free(out)
        raise MemoryError()
    try:
        for p in range(n):
            pos[<int> w[p]] = <int> p
        if n:
            out[pos[1]] = 0
        for letter in range(2, n + 1):
            if pos[letter] < pos[letter - 1]:
                lab += 1
            out[pos[letter]] = lab
        return tuple([out[p] for p in range(n)])
    finally:
        free(pos)
        free(out)


def insertion_rows(word):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t i, r, k, lo, hi, mid
    cdef long x, y
    cdef Py_ssize_t nrows = 0
    # row r occupies cells[r*n : r*n + lens[r]]
    cdef long *cells = <long *> malloc((n * n + 1) * sizeof(long))
    cdef Py_ssize_t *lens = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    if cells == NULL or lens == NULL:
        free(cells)
        free(lens)
        raise MemoryError()
    try:
        for i in range(n):
            x = word[i]
            r = 0
            while True:
                if r == nrows:
                    cells[r * n] = x
                    lens[r] = 1
                    nrows += 1
                    break
                lo = 0
                hi = lens[r]
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if cells[r * n + mid] <= x:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo == lens[r]:
                    cells[r * n + lo] = x
                    lens[r] += 1
                    break
                y = cells[r * n + lo]
                cells[r * n + lo] = x
                x = y
                r += 1
        return tuple([tuple([cells[r * n + k] for k in range(lens[r])]) for r in range(nrows)])
    finally:
        free(cells)
        free(lens)


cdef inline bint _fits(int *nu, int nlen, int a) nogil:
    if a == nlen:
        return True
    if a < nlen:
        return a == 0 or nu[a - 1] > nu[a]
    return False


def catabolism_F(z):
    cdef int n = len(z)
    cdef int i, a, head = 0, length = n, nlen = 0
    if n == 0:
        return ()
    # circular buffer: the word never outgrows n after a pop
    cdef int *buf = <int *> malloc(n * sizeof(int))
    cdef int *nu = <int *> malloc((n + 1) * sizeof(int))
    if buf == NULL or nu == NULL:
        free(buf)
        free(nu)
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = z[i]
        while length:
            a = buf[(head + length - 1) % n]
            length -= 1
            if _fits(nu, nlen, a):
                if a == nlen:
                    nu[nlen] = 1
                    nlen += 1
                else:
                    nu[a] += 1
            else:
                head = (head + n - 1) % n
                buf[head] = a + 1
                length += 1
        return tuple([nu[i] for i in range(nlen)])
    finally:
        free(buf)
        free(nu)


def catabolism_F_bounded(z, lam):
    cdef int n = len(z)
    cdef int bound = len(lam)
    cdef int i, a, cur, head = 0, length = n, nlen = 0
    if n == 0:
        return True
    cdef int *buf = <int *> malloc(n * sizeof(int))
    cdef int *nu = <int *> malloc((n + 1) * sizeof(int))
    cdef int *lim = <int *> malloc((bound + 1) * sizeof(int))
    if buf == NULL or nu == NULL or lim == NULL:
        free(buf)
        free(nu)
        free(lim)
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = z[i]
        for i in range(bound):
            lim[i] = lam[i]
        while length:
            a = buf[(head + length - 1) % n]
            length -= 1
            if a >= bound:
                return False
            cur = nu[a] if a < nlen else 0
            if _fits(nu, nlen, a) and cur + 1 <= lim[a]:
                if a == nlen:
                    nu[nlen] = 1
                    nlen += 1
                else:
                    nu[a] += 1
            else:
                head = (head + n - 1) % n
                buf[head] = a + 1
                length += 1
        return True
    finally:
        free(buf)
        free(nu)
        free(lim)
