# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; results are identical to ``_pykernels``."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64) nogil
    int ctz "__builtin_ctzll"(u64) nogil

cdef enum:
    MAXN = 64


cdef inline int load(object adj, u64 *out) except -1:
    cdef Py_ssize_t n = len(adj)
    cdef Py_ssize_t i
    if n > 62:
        raise ValueError("kernels support at most 62 vertices")
    for i in range(n):
        out[i] = <u64>adj[i]
    return <int>n


cdef int color_bound(const u64 *adj, u64 P) nogil:
    cdef int classes = 0
    cdef u64 Q
    cdef int v
    while P:
        Q = P
        while Q:
            v = ctz(Q)
            Q &= ~adj[v] & ~((<u64>1) << v)
            P &= ~((<u64>1) << v)
        classes += 1
    return classes


# -- cliques ----------------------------------------------------------------

cdef struct CliqueState:
    const u64 *adj
    int best
    u64 best_mask
    int target
    u64 *out
    int nout
    int cap


cdef void clique_expand(CliqueState *st, u64 R, int size, u64 P) nogil:
    cdef int v
    cdef u64 bit
    if not P:
        if size > st.best:
            st.best = size
            st.best_mask = R
        return
    if size + popcount(P) <= st.best or size + color_bound(st.adj, P) <= st.best:
        return
    v = ctz(P)
    bit = (<u64>1) << v
    clique_expand(st, R | bit, size + 1, P & st.adj[v])
    clique_expand(st, R, size, P & ~bit)


cdef int clique_enum(CliqueState *st, u64 R, int size, u64 P) nogil:
    cdef int v
    cdef u64 bit
    if size == st.target:
        if st.nout == st.cap:
            return -1
        st.out[st.nout] = R
        st.nout += 1
        return 0
    if size + popcount(P) < st.target or size + color_bound(st.adj, P) < st.target:
        return 0
    v = ctz(P)
    bit = (<u64>1) << v
    if clique_enum(st, R | bit, size + 1, P & st.adj[v]) < 0:
        return -1
    return clique_enum(st, R, size, P & ~bit)


def max_clique(adj, within):
    cdef u64 a[MAXN]
    load(adj, a)
    cdef CliqueState st
    st.adj = a
    st.best = 0
    st.best_mask = 0
    clique_expand(&st, 0, 0, <u64>within)
    return st.best_mask


def maximum_cliques(adj, within):
    cdef u64 a[MAXN]
    load(adj, a)
    cdef CliqueState st
    st.adj = a
    st.best = 0
    st.best_mask = 0
    clique_expand(&st, 0, 0, <u64>within)
    if st.best == 0:
        return []
    st.target = st.best
    cdef int cap = 1024
    result = None
    while result is None:
        st.out = <u64 *>malloc(cap * sizeof(u64))
        st.cap = cap
        st.nout = 0
        try:
            if clique_enum(&st, 0, 0, <u64>within) == 0:
                result = [st.out[i] for i in range(st.nout)]
        finally:
            free(st.out)
        cap *= 8
    return result


# -- colouring --------------------------------------------------------------

cdef struct ColorState:
    const u64 *adj
    int k
    int deg[MAXN]
    int colors[MAXN]
    u64 classes[MAXN]


cdef int pick(ColorState *st, u64 uncolored, int used) nogil:
    cdef int best_v = -1, best_sat = -1, best_deg = -1
    cdef int v, c, sat
    cdef u64 row
    while uncolored:
        v = ctz(uncolored)
        uncolored &= uncolored - 1
        row = st.adj[v]
        sat = 0
        for c in range(used):
            if row & st.classes[c]:
                sat += 1
        if sat > best_sat or (sat == best_sat and st.deg[v] > best_deg):
            best_v = v
            best_sat = sat
            best_deg = st.deg[v]
    return best_v


cdef bint color_search(ColorState *st, u64 uncolored, int used) nogil:
    cdef int v, c, top
    cdef u64 row, bit
    if not uncolored:
        return True
    v = pick(st, uncolored, used)
    row = st.adj[v]
    bit = (<u64>1) << v
    top = used + 1
    if top > st.k:
        top = st.k
    for c in range(top):
        if row & st.classes[c]:
            continue
        st.classes[c] |= bit
        st.colors[v] = c
        if color_search(st, uncolored & ~bit, used if used > c + 1 else c + 1):
            return True
        st.classes[c] &= ~bit
        st.colors[v] = -1
    return False


def color(adj, within, k):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef u64 w = <u64>within
    cdef ColorState st
    cdef int v
    if not w:
        return [-1] * n
    if k <= 0:
        return None
    st.adj = a
    st.k = k if k < MAXN else MAXN
    for v in range(MAXN):
        st.colors[v] = -1
        st.classes[v] = 0
        st.deg[v] = popcount(a[v] & w) if v < n and (w >> v) & 1 else -1
    if color_search(&st, w, 0):
        return [st.colors[v] for v in range(n)]
    return None


# -- odd holes --------------------------------------------------------------

cdef struct HoleState:
    const u64 *adj
    u64 allowed
    u64 ns
    int length
    int path[MAXN]
    int plen


cdef bint hole_extend(HoleState *st, u64 blocked) nogil:
    cdef int k = st.plen - 1
    cdef int last = st.path[k]
    cdef u64 cand, nxt
    cdef int w
    if k + 1 == st.length - 1:
        cand = st.adj[last] & st.allowed & st.ns & ~blocked & ~(((<u64>2) << st.path[1]) - 1)
        if cand:
            st.path[st.plen] = ctz(cand)
            st.plen += 1
            return True
        return False
    cand = st.adj[last] & st.allowed & ~st.ns & ~blocked
    nxt = blocked | st.adj[last] | ((<u64>1) << last)
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        st.path[st.plen] = w
        st.plen += 1
        if hole_extend(st, nxt):
            return True
        st.plen -= 1
    return False


cdef bint hole_from(HoleState *st, u64 within, int s) nogil:
    cdef u64 cand
    cdef int p1
    st.allowed = within & ~(((<u64>2) << s) - 1)
    st.ns = st.adj[s]
    st.path[0] = s
    st.plen = 1
    cand = st.ns & st.allowed
    while cand:
        p1 = ctz(cand)
        cand &= cand - 1
        st.path[1] = p1
        st.plen = 2
        if hole_extend(st, (<u64>1) << p1):
            return True
    st.plen = 1
    return False


def odd_hole(adj, within, int min_len=5):
    cdef u64 a[MAXN]
    load(adj, a)
    cdef u64 w = <u64>within
    cdef HoleState st
    cdef int total = popcount(w)
    cdef int length = min_len if min_len > 5 else 5
    cdef u64 m
    cdef int s, i
    if length % 2 == 0:
        length += 1
    st.adj = a
    while length <= total:
        st.length = length
        m = w
        while m:
            s = ctz(m)
            m &= m - 1
            if hole_from(&st, w, s):
                return [st.path[i] for i in range(st.plen)]
        length += 2
    return None


# -- induced embeddings -----------------------------------------------------

cdef struct EmbedState:
    const u64 *adj
    int k
    u64 padj[MAXN]
    u64 degok[MAXN]
    int image[MAXN]


cdef bint embed_search(EmbedState *st, int t, u64 used) nogil:
    cdef u64 cand, prow
    cdef int q, v
    if t == st.k:
        return True
    cand = st.degok[t] & ~used
    prow = st.padj[t]
    for q in range(t):
        if (prow >> q) & 1:
            cand &= st.adj[st.image[q]]
        else:
            cand &= ~st.adj[st.image[q]]
    while cand:
        v = ctz(cand)
        cand &= cand - 1
        st.image[t] = v
        if embed_search(st, t + 1, used | ((<u64>1) << v)):
            return True
    return False


def induced_embedding(adj, within, padj, pdeg):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef u64 w = <u64>within
    cdef EmbedState st
    cdef int k = len(padj)
    cdef int t, v, d
    cdef u64 mask
    if k == 0:
        return []
    if k > 62:
        raise ValueError("pattern too large")
    st.adj = a
    st.k = k
    for t in range(k):
        st.padj[t] = <u64>padj[t]
        d = pdeg[t]
        mask = 0
        for v in range(n):
            if (w >> v) & 1 and popcount(a[v] & w) >= d:
                mask |= (<u64>1) << v
        st.degok[t] = mask
    if embed_search(&st, 0, 0):
        return [st.image[t] for t in range(k)]
    return None


# -- whole-subset tables ----------------------------------------------------

cdef bint connected(const u64 *adj, u64 S) nogil:
    cdef u64 seen, frontier, nxt, m
    cdef int v
    if not S:
        return True
    seen = S & (~S + 1)
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = ctz(m)
            m &= m - 1
            nxt |= adj[v]
        frontier = nxt & S & ~seen
        seen |= frontier
    return seen == S


cdef bint odd_hole_or_antihole(const u64 *adj, u64 S, int size) nogil:
    cdef u64 m, cadj[MAXN]
    cdef int v, d = -1, dv
    if size < 5 or size % 2 == 0:
        return False
    m = S
    while m:
        v = ctz(m)
        m &= m - 1
        dv = popcount(adj[v] & S)
        if d == -1:
            d = dv
        elif d != dv:
            return False
    if d == 2:
        return connected(adj, S)
    if d == size - 3:
        m = S
        while m:
            v = ctz(m)
            m &= m - 1
            cadj[v] = ~adj[v] & S & ~((<u64>1) << v)
        return connected(cadj, S)
    return False


cdef int check_table_size(int n) except -1:
    if n > 26:
        raise ValueError("subset tables support at most 26 vertices")
    return 0


cdef void fill_perfect(const u64 *adj, int n, unsigned char *table) nogil:
    cdef u64 size = (<u64>1) << n
    cdef u64 S, m, low
    cdef int pc
    cdef unsigned char ok
    for S in range(size):
        pc = popcount(S)
        if pc < 5:
            table[S] = 1
            continue
        ok = 1
        m = S
        while m:
            low = m & (~m + 1)
            m ^= low
            if not table[S ^ low]:
                ok = 0
                break
        if ok and odd_hole_or_antihole(adj, S, pc):
            ok = 0
        table[S] = ok


cdef void fill_omega(const u64 *adj, int n, unsigned char *table) nogil:
    cdef u64 size = (<u64>1) << n
    cdef u64 S, low
    cdef unsigned char x, y
    table[0] = 0
    for S in range(1, size):
        low = S & (~S + 1)
        x = table[S ^ low]
        y = 1 + table[S & adj[ctz(low)]]
        table[S] = x if x > y else y


def perfect_table(adj, int n):
    cdef u64 a[MAXN]
    load(adj, a)
    check_table_size(n)
    out = bytearray(1 << n)
    cdef unsigned char[::1] view = out
    fill_perfect(a, n, &view[0])
    return out


def omega_table(adj, int n):
    cdef u64 a[MAXN]
    load(adj, a)
    check_table_size(n)
    out = bytearray(1 << n)
    cdef unsigned char[::1] view = out
    fill_omega(a, n, &view[0])
    return out


def first_indivisible(adj, int n):
    cdef u64 a[MAXN]
    load(adj, a)
    check_table_size(n)
    perfect_b = bytearray(1 << n)
    omega_b = bytearray(1 << n)
    cdef unsigned char[::1] perfect = perfect_b
    cdef unsigned char[::1] omega = omega_b
    fill_perfect(a, n, &perfect[0])
    fill_omega(a, n, &omega[0])
    cdef long long best = -1
    cdef int best_pc = n + 1, pc
    cdef u64 S, A
    cdef unsigned char w
    cdef bint ok
    with nogil:
        for S in range(1, (<u64>1) << n):
            if perfect[S]:
                continue
            pc = popcount(S)
            if pc >= best_pc:
                continue
            w = omega[S]
            A = S
            ok = False
            while True:
                if perfect[A] and omega[S ^ A] < w:
                    ok = True
                    break
                if A == 0:
                    break
                A = (A - 1) & S
            if not ok:
                best = <long long>S
                best_pc = pc
    return best


def first_without_anti_divider(adj, int n):
    cdef u64 a[MAXN]
    load(adj, a)
    check_table_size(n)
    perfect_b = bytearray(1 << n)
    cdef unsigned char[::1] perfect = perfect_b
    fill_perfect(a, n, &perfect[0])
    cdef long long best = -1
    cdef int best_pc = n + 1, pc, v
    cdef u64 S, m
    cdef bint ok
    with nogil:
        for S in range(1, (<u64>1) << n):
            pc = popcount(S)
            if pc >= best_pc:
                continue
            m = S
            ok = False
            while m:
                v = ctz(m)
                m &= m - 1
                if perfect[S & ~a[v] & ~((<u64>1) << v)]:
                    ok = True
                    break
            if not ok:
                best = <long long>S
                best_pc = pc
    return best
