"""Pure-Python search kernels.

Reference implementation of every routine in ``_kernels.pyx``; the two must
return identical results.  All inputs are adjacency rows as ``int`` masks and a
``within`` mask restricting the search.
"""

from __future__ import annotations


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _color_bound(adj, P: int) -> int:
    # number of classes in a greedy sequential colouring of P
    classes = 0
    while P:
        Q = P
        while Q:
            v = _low(Q)
            Q &= ~adj[v] & ~(1 << v)
            P &= ~(1 << v)
        classes += 1
    return classes


def max_clique(adj, within: int) -> int:
    """Lexicographically least maximum clique inside ``within``."""
    best = [0, 0]  # size, mask

    def expand(R: int, size: int, P: int) -> None:
        if not P:
            if size > best[0]:
                best[0], best[1] = size, R
            return
        if size + _popcount(P) <= best[0] or size + _color_bound(adj, P) <= best[0]:
            return
        v = _low(P)
        bit = 1 << v
        expand(R | bit, size + 1, P & adj[v])
        expand(R, size, P & ~bit)

    expand(0, 0, within)
    return best[1]


def maximum_cliques(adj, within: int) -> list[int]:
    """Every maximum clique inside ``within``, in lexicographic order."""
    target = _popcount(max_clique(adj, within))
    out: list[int] = []
    if target == 0:
        return out

    def expand(R: int, size: int, P: int) -> None:
        if size == target:
            out.append(R)
            return
        if size + _popcount(P) < target or size + _color_bound(adj, P) < target:
            return
        v = _low(P)
        bit = 1 << v
        expand(R | bit, size + 1, P & adj[v])
        expand(R, size, P & ~bit)

    expand(0, 0, within)
    return out


def color(adj, within: int, k: int):
    """A proper colouring of ``within`` with at most ``k`` colours, or ``None``.

    DSATUR-ordered backtracking.  The result lists a colour per vertex, ``-1``
    for vertices outside ``within``.
    """
    n = len(adj)
    colors = [-1] * n
    if not within:
        return colors
    if k <= 0:
        return None
    classes = [0] * k
    deg = [_popcount(adj[v] & within) if within >> v & 1 else -1 for v in range(n)]

    def pick(uncolored: int, used: int) -> int:
        best_v, best_key = -1, (-1, -1)
        m = uncolored
        while m:
            v = _low(m)
            m &= m - 1
            sat = 0
            row = adj[v]
            for c in range(used):
                if row & classes[c]:
                    sat += 1
            key = (sat, deg[v])
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def search(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        v = pick(uncolored, used)
        row = adj[v]
        bit = 1 << v
        for c in range(min(used + 1, k)):
            if row & classes[c]:
                continue
            classes[c] |= bit
            colors[v] = c
            if search(uncolored & ~bit, max(used, c + 1)):
                return True
            classes[c] &= ~bit
            colors[v] = -1
        return False

    return colors if search(within, 0) else None


def odd_hole(adj, within: int, min_len: int = 5):
    """A shortest induced odd cycle of length >= ``min_len`` inside ``within``.

    Returns the cycle as a vertex list starting at its least vertex, oriented so
    the second vertex is smaller than the last, or ``None``.
    """
    total = _popcount(within)
    length = max(5, min_len)
    if length % 2 == 0:
        length += 1
    while length <= total:
        m = within
        while m:
            s = _low(m)
            m &= m - 1
            found = _hole_from(adj, within, s, length)
            if found is not None:
                return found
        length += 2
    return None


def _hole_from(adj, within: int, s: int, length: int):
    allowed = within & ~((2 << s) - 1)
    ns = adj[s]
    path = [s]

    def extend(blocked: int) -> bool:
        k = len(path) - 1
        last = path[k]
        if k + 1 == length - 1:
            cand = adj[last] & allowed & ns & ~blocked & ~((2 << path[1]) - 1)
            if cand:
                path.append(_low(cand))
                return True
            return False
        cand = adj[last] & allowed & ~ns & ~blocked
        # blocked for the next level covers every path vertex except the last
        nxt = blocked | adj[last] | (1 << last)
        while cand:
            w = _low(cand)
            cand &= cand - 1
            path.append(w)
            if extend(nxt):
                return True
            path.pop()
        return False

    cand = ns & allowed
    while cand:
        p1 = _low(cand)
        cand &= cand - 1
        path.append(p1)
        # path vertices are excluded through ``blocked``; s is excluded by ``allowed``
        if extend(1 << p1):
            return path
        path.pop()
    return None


def induced_embedding(adj, within: int, padj, pdeg):
    """First induced embedding of a pattern whose vertices are given in search order.

    ``padj[t]`` is the pattern adjacency mask of vertex ``t`` over pattern
    indices; candidates are tried in increasing host order so the result is the
    lexicographically least host tuple.
    """
    k = len(padj)
    if k == 0:
        return []
    n = len(adj)
    degok = []
    for t in range(k):
        mask = 0
        for v in range(n):
            if within >> v & 1 and _popcount(adj[v] & within) >= pdeg[t]:
                mask |= 1 << v
        degok.append(mask)
    image = [0] * k

    def search(t: int, used: int) -> bool:
        if t == k:
            return True
        cand = degok[t] & ~used
        prow = padj[t]
        for q in range(t):
            if prow >> q & 1:
                cand &= adj[image[q]]
            else:
                cand &= ~adj[image[q]]
        while cand:
            v = _low(cand)
            cand &= cand - 1
            image[t] = v
            if search(t + 1, used | 1 << v):
                return True
        return False

    return image if search(0, 0) else None


# -- whole-subset tables ------------------------------------------------------


def _connected(adj, S: int) -> bool:
    if not S:
        return True
    seen = S & -S
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = _low(m)
            m &= m - 1
            nxt |= adj[v]
        frontier = nxt & S & ~seen
        seen |= frontier
    return seen == S


def _is_odd_hole_or_antihole(adj, S: int, size: int) -> bool:
    if size < 5 or size % 2 == 0:
        return False
    degs = set()
    m = S
    while m:
        v = _low(m)
        m &= m - 1
        degs.add(_popcount(adj[v] & S))
        if len(degs) > 1:
            return False
    d = degs.pop()
    if d == 2:
        return _connected(adj, S)
    if d == size - 3:
        cadj = [(~adj[v] & S & ~(1 << v)) if S >> v & 1 else 0 for v in range(len(adj))]
        return _connected(cadj, S)
    return False


def perfect_table(adj, n: int) -> bytearray:
    """``table[S]`` is 1 iff the subgraph induced by ``S`` has no odd hole or antihole."""
    size = 1 << n
    table = bytearray(size)
    for S in range(size):
        pc = _popcount(S)
        if pc < 5:
            table[S] = 1
            continue
        ok = 1
        m = S
        while m:
            low = m & -m
            m ^= low
            if not table[S ^ low]:
                ok = 0
                break
        if ok and _is_odd_hole_or_antihole(adj, S, pc):
            ok = 0
        table[S] = ok
    return table


def omega_table(adj, n: int) -> bytearray:
    size = 1 << n
    table = bytearray(size)
    for S in range(1, size):
        low = S & -S
        v = low.bit_length() - 1
        a = table[S ^ low]
        b = 1 + table[S & adj[v]]
        table[S] = a if a > b else b
    return table


def first_indivisible(adj, n: int) -> int:
    """Least-size (then least mask) vertex subset with no perfect division, or -1."""
    perfect = perfect_table(adj, n)
    omega = omega_table(adj, n)
    best, best_pc = -1, n + 1
    for S in range(1, 1 << n):
        if perfect[S]:
            continue
        pc = _popcount(S)
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
            best, best_pc = S, pc
    return best


def first_without_anti_divider(adj, n: int) -> int:
    """Least-size (then least mask) nonempty subset where no vertex has a perfect anti-neighbourhood, or -1."""
    perfect = perfect_table(adj, n)
    best, best_pc = -1, n + 1
    for S in range(1, 1 << n):
        pc = _popcount(S)
        if pc >= best_pc:
            continue
        m = S
        ok = False
        while m:
            v = _low(m)
            m &= m - 1
            if perfect[S & ~adj[v] & ~(1 << v)]:
                ok = True
                break
        if not ok:
            best, best_pc = S, pc
    return best
