# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled HLT coset enumeration kernel with lookahead.

Mirrors _tcpure statement for statement; keep the two in sync.
"""

from libc.stdlib cimport malloc, realloc, free

cdef int UNDEF = -1
cdef long LOOKAHEAD_SLACK = 1 << 16


cdef struct State:
    int ngens
    long max_cosets
    int *table
    int *rep
    long nrows
    long cap
    long nlive
    long *pending
    long npending
    long pending_cap


cdef inline long find(State *st, long c) noexcept:
    cdef long root = c
    cdef long tmp
    while st.rep[root] != root:
        root = st.rep[root]
    while st.rep[c] != root:
        tmp = st.rep[c]
        st.rep[c] = <int> root
        c = tmp
    return root


cdef int grow(State *st) except -1:
    cdef long newcap = st.cap * 2
    st.table = <int *> realloc(st.table, newcap * st.ngens * sizeof(int))
    st.rep = <int *> realloc(st.rep, newcap * sizeof(int))
    if st.table == NULL or st.rep == NULL:
        raise MemoryError()
    st.cap = newcap
    return 0


cdef inline long define(State *st, long c, int x) except -2:
    cdef long n
    cdef int k
    if st.nlive >= st.max_cosets:
        return UNDEF
    if st.nrows >= st.cap:
        grow(st)
    n = st.nrows
    st.nrows += 1
    for k in range(st.ngens):
        st.table[n * st.ngens + k] = UNDEF
    st.rep[n] = <int> n
    st.nlive += 1
    st.table[c * st.ngens + x] = <int> n
    st.table[n * st.ngens + x] = <int> c
    return n


cdef inline int push_pending(State *st, long b) except -1:
    if st.npending >= st.pending_cap:
        st.pending_cap *= 2
        st.pending = <long *> realloc(st.pending,
                                      st.pending_cap * sizeof(long))
        if st.pending == NULL:
            raise MemoryError()
    st.pending[st.npending] = b
    st.npending += 1
    return 0


cdef inline int merge(State *st, long a, long b) except -1:
    cdef long tmp
    a = find(st, a)
    b = find(st, b)
    if a != b:
        if b < a:
            tmp = a
            a = b
            b = tmp
        st.rep[b] = <int> a
        st.nlive -= 1
        push_pending(st, b)
    return 0


cdef int coincidence(State *st, long a, long b) except -1:
    cdef long gamma, delta, mu, nu, base
    cdef int x
    cdef int ngens = st.ngens
    merge(st, a, b)
    while st.npending > 0:
        st.npending -= 1
        gamma = st.pending[st.npending]
        base = gamma * ngens
        for x in range(ngens):
            delta = st.table[base + x]
            if delta == UNDEF:
                continue
            st.table[delta * ngens + x] = UNDEF
            mu = find(st, gamma)
            nu = find(st, delta)
            if st.table[mu * ngens + x] != UNDEF:
                merge(st, nu, st.table[mu * ngens + x])
            elif st.table[nu * ngens + x] != UNDEF:
                merge(st, mu, st.table[nu * ngens + x])
            else:
                st.table[mu * ngens + x] = <int> nu
                st.table[nu * ngens + x] = <int> mu
    return 0


cdef int scan(State *st, long c, int *word, int wlen, bint fill) except -1:
    """Scan word from coset c; fill gaps when fill is set.

    Returns 0 only when a needed definition hits max_cosets, else 1.
    """
    cdef long f = c
    cdef long b = c
    cdef int i = 0
    cdef int j = wlen - 1
    cdef int x
    cdef int ngens = st.ngens
    while True:
        while i <= j and st.table[f * ngens + word[i]] != UNDEF:
            f = st.table[f * ngens + word[i]]
            i += 1
        if i > j:
            if f != b:
                coincidence(st, f, b)
            return 1
        while j >= i and st.table[b * ngens + word[j]] != UNDEF:
            b = st.table[b * ngens + word[j]]
            j -= 1
        if j < i:
            coincidence(st, f, b)
            return 1
        if i == j:
            # deduction closes the gap
            x = word[i]
            if st.table[f * ngens + x] != UNDEF:
                coincidence(st, st.table[f * ngens + x], b)
            elif st.table[b * ngens + x] != UNDEF:
                coincidence(st, st.table[b * ngens + x], f)
            else:
                st.table[f * ngens + x] = <int> b
                st.table[b * ngens + x] = <int> f
            return 1
        if not fill:
            return 1
        if define(st, f, word[i]) == UNDEF:
            return 0


cdef int lookahead(State *st, int nrel, int **words, int *wlens) except -1:
    cdef long c
    cdef int r
    for c in range(st.nrows):
        if st.rep[c] != c:
            continue
        for r in range(nrel):
            scan(st, c, words[r], wlens[r], False)
            if st.rep[c] != c:
                break
    return 0


cdef long compact(State *st, long position) except -1:
    """Drop dead rows, renumber in definition order.

    Returns the new scan position for a loop that had processed all
    cosets below position.
    """
    cdef int ngens = st.ngens
    cdef long n = 0, c, new_position = 0
    cdef int x, v
    cdef int *new_table
    cdef long *renum = <long *> malloc(st.nrows * sizeof(long))
    if renum == NULL:
        raise MemoryError()
    for c in range(st.nrows):
        if st.rep[c] == c:
            renum[c] = n
            n += 1
        else:
            renum[c] = UNDEF
    new_table = <int *> malloc((n if n > 0 else 1) * ngens * sizeof(int))
    if new_table == NULL:
        free(renum)
        raise MemoryError()
    for c in range(st.nrows):
        if renum[c] == UNDEF:
            continue
        for x in range(ngens):
            v = st.table[c * ngens + x]
            if v == UNDEF:
                new_table[renum[c] * ngens + x] = UNDEF
            else:
                new_table[renum[c] * ngens + x] = <int> renum[find(st, v)]
    if position > st.nrows:
        position = st.nrows
    for c in range(position):
        if renum[c] != UNDEF:
            new_position += 1
    free(renum)
    free(st.table)
    st.table = new_table
    st.cap = n if n > 0 else 1
    st.nrows = n
    for c in range(n):
        st.rep[c] = <int> c
    return new_position


cdef int process(State *st, long c, int nrel, int **words,
                 int *wlens) except -1:
    """Fill every relator trace and row entry of live coset c."""
    cdef int r, x
    for r in range(nrel):
        if not scan(st, c, words[r], wlens[r], True):
            return 0
        if st.rep[c] != c:
            return 1
    for x in range(st.ngens):
        if st.rep[c] != c:
            return 1
        if st.table[c * st.ngens + x] == UNDEF:
            if define(st, c, x) == UNDEF:
                return 0
    return 1


cdef int *pack_word(word) except NULL:
    cdef int *w = <int *> malloc((len(word) if len(word) else 1)
                                 * sizeof(int))
    cdef int i
    if w == NULL:
        raise MemoryError()
    for i in range(len(word)):
        w[i] = word[i]
    return w


def enumerate_cosets(int ngens, relators, subgens, long max_cosets):
    """Run HLT over the given relators and subgroup generator words.

    Returns a flat row-major table (live cosets only, renumbered in
    first-definition order) or None when max_cosets live cosets are
    exceeded.
    """
    cdef State st
    cdef int nrel = len(relators)
    cdef int **words = NULL
    cdef int *wlens = NULL
    cdef long c, next_la
    cdef int r, ok
    cdef int *wp
    cdef list out

    st.ngens = ngens
    st.max_cosets = max_cosets
    st.cap = 1024
    st.nrows = 1
    st.nlive = 1
    st.npending = 0
    st.pending_cap = 1024
    st.table = <int *> malloc(st.cap * ngens * sizeof(int))
    st.rep = <int *> malloc(st.cap * sizeof(int))
    st.pending = <long *> malloc(st.pending_cap * sizeof(long))
    if st.table == NULL or st.rep == NULL or st.pending == NULL:
        raise MemoryError()
    for r in range(ngens):
        st.table[r] = UNDEF
    st.rep[0] = 0

    try:
        words = <int **> malloc((nrel if nrel else 1) * sizeof(int *))
        wlens = <int *> malloc((nrel if nrel else 1) * sizeof(int))
        if words == NULL or wlens == NULL:
            raise MemoryError()
        for r in range(nrel):
            words[r] = NULL
        for r in range(nrel):
            words[r] = pack_word(relators[r])
            wlens[r] = len(relators[r])

        for word in subgens:
            wp = pack_word(word)
            ok = scan(&st, 0, wp, len(word), True)
            free(wp)
            if not ok:
                return None

        next_la = LOOKAHEAD_SLACK
        c = 0
        while c < st.nrows:
            if st.nrows >= next_la:
                lookahead(&st, nrel, words, wlens)
                c = compact(&st, c)
                next_la = st.nrows + max(st.nlive, LOOKAHEAD_SLACK)
            if st.rep[c] != c:
                c += 1
                continue
            if not process(&st, c, nrel, words, wlens):
                # out of room: a lookahead may free cosets, retry once
                lookahead(&st, nrel, words, wlens)
                c = compact(&st, c)
                next_la = st.nrows + max(st.nlive, LOOKAHEAD_SLACK)
                if st.rep[c] == c and not process(&st, c, nrel, words, wlens):
                    return None
            c += 1

        compact(&st, 0)
        out = [0] * (st.nrows * ngens)
        for c in range(st.nrows * ngens):
            out[c] = st.table[c]
        return out
    finally:
        if words != NULL:
            for r in range(nrel):
                if words[r] != NULL:
                    free(words[r])
            free(words)
        if wlens != NULL:
            free(wlens)
        free(st.table)
        free(st.rep)
        free(st.pending)
