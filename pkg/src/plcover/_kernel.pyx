# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Fixed-width walk step, mirroring ``plcover.search.step_py``.

Operands are held in 128-bit integers.  Inputs are accepted only while the
denominator and every size bound stay below 2**62; under that guard no
intermediate product exceeds 2**125.  Out-of-range steps return None and the
caller falls back to the arbitrary-precision path.
"""

cdef extern from *:
    """
    typedef __int128 i128;
    """
    ctypedef long long i128

cdef long long LIMIT = 1LL << 62
cdef i128 DLIMIT = 1LL << 31


cdef inline i128 iabs(i128 v) nogil:
    return -v if v < 0 else v


cdef inline i128 igcd(i128 u, i128 v) nogil:
    cdef i128 t
    u = iabs(u)
    v = iabs(v)
    while v:
        t = u % v
        u = v
        v = t
    return u


def step(object a_obj, object b_obj, long long p, long long E, long long max_n):
    if b_obj >= LIMIT or a_obj <= 0 or E >= (1 << 20) or p >= (1 << 16):
        return None
    cdef i128 a = <long long>a_obj
    cdef i128 b = <long long>b_obj
    cdef i128 an = a, pn = 1, c1 = 0, s1 = 0, cap
    cdef long long n, n1 = 0
    cdef bint big = False

    # type-1 scan; s1 = 0 marks "no usable type-1 bound" (missing or >= 2**62)
    for n in range(1, max_n + 1):
        an = an * p % b
        if not big:
            pn = pn * p
            if pn >= LIMIT:
                big = True
        if an <= a or b - an < a:
            n1 = n
            if not big:
                c1 = pn * a // b
                if an > a:
                    c1 += 1
                s1 = pn
            break
    if n1 == 0 and not big:
        s1 = 0
        cap = pn  # p**max_n, below 2**62
    else:
        cap = s1 if s1 else LIMIT - 1

    # Type-2 refinement below the running bound.  With the bound clipped to
    # 2**62 the search still finds the true optimum whenever that lies below
    # the clip, since each candidate is reached at its own normalized (n, d).
    cdef i128 bound = cap, num, q, r, h0, h1, k0, k1, t, ds, praw, s, diff
    cdef i128 best_s = 0, best_c = 0, best_d = 0
    cdef long long best_n = 0, k, j, nn = 0
    cdef bint found = False
    pn = 1
    while E * pn <= bound:
        num = pn * a
        h0 = 0; h1 = 1; k0 = 1; k1 = 0
        q = num
        r = b
        while r:
            t = q // r
            q, r = r, q - t * r
            h0, h1 = h1, t * h1 + h0
            k0, k1 = k1, t * k1 + k0
            if k1 >= DLIMIT:
                break
            praw = E * pn * k1 * k1
            if praw > bound:
                break
            # num*k1 - b*h1 without forming num*k1: with w = num // b,
            # num = w*b + (num % b) and h1 - w*k1 is small
            diff = (num % b) * k1 - b * (h1 - (num // b) * k1)
            if E * k1 * iabs(diff) < b:
                ds = k1
                k = 0
                while ds % p == 0:
                    ds //= p
                    k += 1
                s = praw
                for j in range(k):
                    s //= p
                if (not found or s < best_s or
                        (s == best_s and (nn + k < best_n or
                                          (nn + k == best_n and ds < best_d)))):
                    found = True
                    best_s = s
                    best_n = nn + k
                    best_d = ds
                    best_c = h1
                    bound = s
        nn += 1
        pn = pn * p

    cdef i128 ln, ld, g
    if found and (s1 == 0 or best_s < s1):
        ln = best_c * best_d * E - 1
        ld = best_s
        g = igcd(ln, ld)
        return (2, <long long>best_c, <long long>best_d, best_n, <long long>best_s,
                <long long>(ln // g), <long long>(ld // g))
    if s1 == 0:
        return None
    ln = c1
    ld = s1 + 1
    g = igcd(ln, ld)
    return (1, <long long>c1, 0, n1, <long long>s1, <long long>(ln // g), <long long>(ld // g))
