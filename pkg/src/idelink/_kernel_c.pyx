# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Exact integer normal-form kernel, compiled backend.

Operation-for-operation mirror of ``idelink._kernel_py``: the same
pivoting rules and the same canonical forms, with C-level loop indexing
over Python-int entries (exactness is never traded for speed).  Keep the
two files in sync; the parity tests compare their outputs directly.
"""


BACKEND = "compiled"


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g == a*x + b*y."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


cdef Py_ssize_t _reduce_columns(Py_ssize_t nrows, list cols, list mirror) except -1:
    cdef Py_ssize_t ncols = len(cols)
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t i, j, k, t, pivot_at, mlen
    cdef list cp, cj, cr, ck, mp, mj, mr, mk
    cdef object a, b, q, rem, g, x, y, af, bf, u, v, s, p
    for i in range(nrows):
        if rank == ncols:
            break
        pivot_at = -1
        for j in range(rank, ncols):
            if (<list>cols[j])[i] != 0:
                pivot_at = j
                break
        if pivot_at < 0:
            continue
        cp = <list>cols[pivot_at]
        for j in range(pivot_at + 1, ncols):
            cj = <list>cols[j]
            b = cj[i]
            if b == 0:
                continue
            a = cp[i]
            q, rem = divmod(b, a)
            if rem == 0:
                for t in range(i, nrows):
                    s = cp[t]
                    if s != 0:
                        cj[t] = cj[t] - q * s
                if mirror is not None:
                    mp = <list>mirror[pivot_at]
                    mj = <list>mirror[j]
                    mlen = len(mj)
                    for t in range(mlen):
                        s = mp[t]
                        if s != 0:
                            mj[t] = mj[t] - q * s
            else:
                g, x, y = xgcd(a, b)
                af = a // g
                bf = b // g
                for t in range(i, nrows):
                    u = cp[t]
                    v = cj[t]
                    cp[t] = x * u + y * v
                    cj[t] = af * v - bf * u
                if mirror is not None:
                    mp = <list>mirror[pivot_at]
                    mj = <list>mirror[j]
                    mlen = len(mj)
                    for t in range(mlen):
                        u = mp[t]
                        v = mj[t]
                        mp[t] = x * u + y * v
                        mj[t] = af * v - bf * u
        if pivot_at != rank:
            cols[rank], cols[pivot_at] = cols[pivot_at], cols[rank]
            if mirror is not None:
                mirror[rank], mirror[pivot_at] = mirror[pivot_at], mirror[rank]
        cr = <list>cols[rank]
        if cr[i] < 0:
            for t in range(i, nrows):
                cr[t] = -cr[t]
            if mirror is not None:
                mr = <list>mirror[rank]
                mlen = len(mr)
                for t in range(mlen):
                    mr[t] = -mr[t]
        p = cr[i]
        for k in range(rank):
            ck = <list>cols[k]
            q = ck[i] // p
            if q != 0:
                for t in range(i, nrows):
                    s = cr[t]
                    if s != 0:
                        ck[t] = ck[t] - q * s
                if mirror is not None:
                    mk = <list>mirror[k]
                    mr = <list>mirror[rank]
                    mlen = len(mk)
                    for t in range(mlen):
                        s = mr[t]
                        if s != 0:
                            mk[t] = mk[t] - q * s
        rank += 1
    return rank


def col_hnf(nrows, cols):
    """Canonical column HNF of the lattice generated by ``cols``."""
    cdef list work = [list(c) for c in cols]
    cdef Py_ssize_t rank = _reduce_columns(nrows, work, None)
    return work[:rank]


def col_hnf_with_kernel(nrows, cols):
    """Return (hnf_cols, kernel_cols) for the column map of ``cols``."""
    cdef list work = [list(c) for c in cols]
    cdef Py_ssize_t ncols = len(cols)
    cdef Py_ssize_t j, r
    cdef list mirror = []
    for j in range(ncols):
        mirror.append([1 if r == j else 0 for r in range(ncols)])
    cdef Py_ssize_t rank = _reduce_columns(nrows, work, mirror)
    return work[:rank], mirror[rank:]


cdef list _identity_rows(Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t r
    for r in range(n):
        out.append([1 if c == r else 0 for c in range(n)])
    return out


def smith(nrows, ncols, rows):
    """Smith normal form with transforms: returns (u, d, v), row-major."""
    cdef Py_ssize_t nr = nrows, nc = ncols
    cdef list d = [list(r) for r in rows]
    cdef list u = _identity_rows(nr)
    cdef list v = _identity_rows(nc)
    cdef Py_ssize_t t = 0, limit = nr if nr < nc else nc
    cdef Py_ssize_t i, j, c, pi, pj, bad
    cdef list di, dt, di_, ut, ui, row, db, ub
    cdef object best, x, p, q, rem, g, x1, y1, pf, xf, a1, b1, s
    cdef bint row_dirty, col_clear
    while t < limit:
        best = None
        pi = pj = -1
        for i in range(t, nr):
            di = <list>d[i]
            for j in range(t, nc):
                x = di[j]
                if x != 0:
                    if x < 0:
                        x = -x
                    if pi < 0 or x < best:
                        best = x
                        pi = i
                        pj = j
                        if best == 1:
                            break
            if best == 1:
                break
        if pi < 0:
            break
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for i in range(nr):
                row = <list>d[i]
                row[t], row[pj] = row[pj], row[t]
            for i in range(nc):
                row = <list>v[i]
                row[t], row[pj] = row[pj], row[t]
        while True:
            for i in range(t + 1, nr):
                x = (<list>d[i])[t]
                if x == 0:
                    continue
                p = (<list>d[t])[t]
                q, rem = divmod(x, p)
                if rem == 0:
                    dt = <list>d[t]
                    di_ = <list>d[i]
                    ut = <list>u[t]
                    ui = <list>u[i]
                    for c in range(t, nc):
                        s = dt[c]
                        if s != 0:
                            di_[c] = di_[c] - q * s
                    for c in range(nr):
                        s = ut[c]
                        if s != 0:
                            ui[c] = ui[c] - q * s
                else:
                    g, x1, y1 = xgcd(p, x)
                    pf = p // g
                    xf = x // g
                    dt = <list>d[t]
                    di_ = <list>d[i]
                    ut = <list>u[t]
                    ui = <list>u[i]
                    for c in range(t, nc):
                        a1 = dt[c]
                        b1 = di_[c]
                        dt[c] = x1 * a1 + y1 * b1
                        di_[c] = pf * b1 - xf * a1
                    for c in range(nr):
                        a1 = ut[c]
                        b1 = ui[c]
                        ut[c] = x1 * a1 + y1 * b1
                        ui[c] = pf * b1 - xf * a1
            row_dirty = False
            for j in range(t + 1, nc):
                x = (<list>d[t])[j]
                if x == 0:
                    continue
                p = (<list>d[t])[t]
                q, rem = divmod(x, p)
                if rem == 0:
                    for i in range(nr):
                        row = <list>d[i]
                        s = row[t]
                        if s != 0:
                            row[j] = row[j] - q * s
                    for i in range(nc):
                        row = <list>v[i]
                        s = row[t]
                        if s != 0:
                            row[j] = row[j] - q * s
                else:
                    g, x1, y1 = xgcd(p, x)
                    pf = p // g
                    xf = x // g
                    for i in range(nr):
                        row = <list>d[i]
                        a1 = row[t]
                        b1 = row[j]
                        row[t] = x1 * a1 + y1 * b1
                        row[j] = pf * b1 - xf * a1
                    for i in range(nc):
                        row = <list>v[i]
                        a1 = row[t]
                        b1 = row[j]
                        row[t] = x1 * a1 + y1 * b1
                        row[j] = pf * b1 - xf * a1
                    row_dirty = True
            if row_dirty:
                continue
            col_clear = True
            for i in range(t + 1, nr):
                if (<list>d[i])[t] != 0:
                    col_clear = False
                    break
            if not col_clear:
                continue
            if (<list>d[t])[t] < 0:
                dt = <list>d[t]
                ut = <list>u[t]
                for c in range(t, nc):
                    dt[c] = -dt[c]
                for c in range(nr):
                    ut[c] = -ut[c]
            p = (<list>d[t])[t]
            bad = -1
            for i in range(t + 1, nr):
                di = <list>d[i]
                for j in range(t + 1, nc):
                    if di[j] % p != 0:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            db = <list>d[bad]
            ub = <list>u[bad]
            dt = <list>d[t]
            ut = <list>u[t]
            for c in range(t, nc):
                dt[c] = dt[c] + db[c]
            for c in range(nr):
                ut[c] = ut[c] + ub[c]
        t += 1
    return u, d, v
