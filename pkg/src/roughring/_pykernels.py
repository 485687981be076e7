"""Pure-Python kernels. Reference twin of ``_ckernels.pyx``; keep the two in lockstep.

All sets are int bitmasks. Map tables are flat sequences of length
``nmaps * nsrc`` holding one image mask per (map, source element). Ring
tables are flat ``n * n`` sequences indexed ``a * n + b``.
"""

# single-map laws, quantified over (map, A, B)
P21_1, P21_2, P21_3, P21_4, P21_5 = range(5)
# map-pair laws, quantified over (F1, F2, A)
T21_1, T21_2, T21_3, T21_4 = range(4)

RING_AXIOMS = (
    None,
    "add-commutativity",
    "add-identity",
    "add-inverse",
    "add-associativity",
    "mul-associativity",
    "left-distributivity",
    "right-distributivity",
)
CONGRUENCE_OPS = ("addition", "right-multiplication", "left-multiplication")


def approx_tables(maps, nmaps, nsrc, nsub):
    """Lower and upper approximations of every subset under every map."""
    lower = [0] * (nmaps * nsub)
    upper = [0] * (nmaps * nsub)
    for m in range(nmaps):
        row = maps[m * nsrc:(m + 1) * nsrc]
        base = m * nsub
        for a in range(nsub):
            lo = up = 0
            for x in range(nsrc):
                img = row[x]
                if img & ~a == 0:
                    lo |= 1 << x
                if img & a:
                    up |= 1 << x
            lower[base + a] = lo
            upper[base + a] = up
    return lower, upper


def _approx_one(images, nsrc, a):
    lo = up = 0
    for x in range(nsrc):
        img = images[x]
        if img & ~a == 0:
            lo |= 1 << x
        if img & a:
            up |= 1 << x
    return lo, up


def _record(found, left, right, witness):
    diff, not_sub, not_sup = found
    if diff is None and left != right:
        diff = witness
    if not_sub is None and left & ~right:
        not_sub = witness
    if not_sup is None and right & ~left:
        not_sup = witness
    return diff, not_sub, not_sup


def scan_single(maps, nmaps, nsrc, nsub, law):
    """Compare both sides of a single-map law on every instance.

    Returns ``(instances, diff, not_sub, not_sup)``; each witness is the
    first ``(map, A, B)`` in enumeration order where the sides differ,
    where left is not a subset of right, and the reverse.
    """
    lower, upper = approx_tables(maps, nmaps, nsrc, nsub)
    found = (None, None, None)
    instances = 0
    for m in range(nmaps):
        lo = lower[m * nsub:(m + 1) * nsub]
        up = upper[m * nsub:(m + 1) * nsub]
        if law == P21_2:
            instances += 1
            found = _record(found, up[0], 0, (m, 0, 0))
            continue
        for a in range(nsub):
            for b in range(nsub):
                if law == P21_1:
                    left, right = lo[a & b], lo[a] & lo[b]
                elif law == P21_3:
                    left, right = up[a | b], up[a] | up[b]
                elif law == P21_4:
                    left, right = lo[a] | lo[b], lo[a | b]
                else:
                    left, right = up[a & b], up[a] & up[b]
                found = _record(found, left, right, (m, a, b))
        instances += nsub * nsub
    return (instances,) + found


def scan_pair(maps, nmaps, nsrc, nsub, law, require_meet):
    """Compare both sides of a two-map law on every ``(F1, F2, A)``.

    With ``require_meet`` only pairs whose pointwise intersection is
    non-empty everywhere are visited.
    """
    lower, upper = approx_tables(maps, nmaps, nsrc, nsub)
    found = (None, None, None)
    instances = 0
    for m1 in range(nmaps):
        r1 = maps[m1 * nsrc:(m1 + 1) * nsrc]
        for m2 in range(nmaps):
            r2 = maps[m2 * nsrc:(m2 + 1) * nsrc]
            join = [r1[x] | r2[x] for x in range(nsrc)]
            meet = [r1[x] & r2[x] for x in range(nsrc)]
            if require_meet and not all(meet):
                continue
            for a in range(nsub):
                lo1, up1 = lower[m1 * nsub + a], upper[m1 * nsub + a]
                lo2, up2 = lower[m2 * nsub + a], upper[m2 * nsub + a]
                if law == T21_1:
                    left, right = _approx_one(join, nsrc, a)[1], up1 | up2
                elif law == T21_2:
                    left, right = _approx_one(meet, nsrc, a)[1], up1 & up2
                elif law == T21_3:
                    left, right = _approx_one(join, nsrc, a)[0], lo1 & lo2
                else:
                    left, right = lo1 | lo2, _approx_one(meet, nsrc, a)[0]
                found = _record(found, left, right, (m1, m2, a))
            instances += nsub
    return (instances,) + found


def ring_violation(add, mul, n, zero):
    """First ring-axiom failure as ``(code, a, b, c)``, or None."""
    for a in range(n):
        for b in range(n):
            if add[a * n + b] != add[b * n + a]:
                return 1, a, b, 0
    for a in range(n):
        if add[zero * n + a] != a:
            return 2, a, 0, 0
    for a in range(n):
        if all(add[a * n + b] != zero for b in range(n)):
            return 3, a, 0, 0
    for code, op in ((4, add), (5, mul)):
        for a in range(n):
            for b in range(n):
                ab = op[a * n + b]
                for c in range(n):
                    if op[ab * n + c] != op[a * n + op[b * n + c]]:
                        return code, a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]]:
                    return 6, a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[add[a * n + b] * n + c] != add[mul[a * n + c] * n + mul[b * n + c]]:
                    return 7, a, b, c
    return None


def congruence_violation(add, mul, n, block_of):
    """First ``(op, x, y, c)`` with x ~ y whose images under c land in different blocks."""
    for op in range(3):
        for x in range(n):
            for y in range(n):
                if block_of[x] != block_of[y]:
                    continue
                for c in range(n):
                    if op == 0:
                        u, v = add[x * n + c], add[y * n + c]
                    elif op == 1:
                        u, v = mul[x * n + c], mul[y * n + c]
                    else:
                        u, v = mul[c * n + x], mul[c * n + y]
                    if block_of[u] != block_of[v]:
                        return op, x, y, c
    return None
