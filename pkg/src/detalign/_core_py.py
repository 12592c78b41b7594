"""Pure-Python kernels. Same signatures and results as the compiled ``_core``.

Polynomials are passed flattened: ``coeffs[t]`` is the coefficient of term
``t`` (already reduced into ``[0, q)``) and ``exps[t*K + k]`` the exponent of
variable ``k``. Grid points are ordered with X1 as the most significant digit.
"""

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime_u64(n):
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _power_tables(exps, q):
    """x**e mod q for every x in [0, q) and every distinct exponent in use."""
    tables = {}
    for e in set(exps):
        if e == 0:
            continue
        tables[e] = [pow(x, e, q) for x in range(q)]
    return tables


def eval_points_mod(coeffs, exps, K, points, q):
    nterms = len(coeffs)
    npts = len(points) // K if K else 0
    out = [0] * npts
    for i in range(npts):
        base = i * K
        acc = 0
        for t in range(nterms):
            v = coeffs[t]
            off = t * K
            for k in range(K):
                e = exps[off + k]
                if e:
                    v = v * pow(points[base + k], e, q) % q
                    if not v:
                        break
            acc += v
        out[i] = acc % q
    return out


def eval_grid_mod(coeffs, exps, K, q):
    tables = _power_tables(exps, q)
    nterms = len(coeffs)
    # per term, the (table, stride-digit) pairs of its nonzero exponents
    plan = []
    for t in range(nterms):
        factors = [(tables[exps[t * K + k]], k) for k in range(K) if exps[t * K + k]]
        plan.append((coeffs[t], factors))
    total = q ** K
    out = [0] * total
    digits = [0] * K
    for idx in range(total):
        acc = 0
        for c, factors in plan:
            v = c
            for table, k in factors:
                v = v * table[digits[k]] % q
            acc += v
        out[idx] = acc % q
        # odometer increment, last variable fastest
        k = K - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < q:
                break
            digits[k] = 0
            k -= 1
    return out


def reconstruction_violations(h_vals, r_vals, q, K, j):
    """Count assignments of the other K-1 variables under which h does not
    determine r as a function of variable ``j`` (0-based)."""
    stride = q ** (K - 1 - j)
    high = q ** j
    seen = [-1] * q
    violations = 0
    for hi in range(high):
        for lo in range(stride):
            base = hi * stride * q + lo
            for v in range(q):
                seen[v] = -1
            bad = False
            for x in range(q):
                idx = base + x * stride
                hv = h_vals[idx]
                rv = r_vals[idx]
                if seen[hv] == -1:
                    seen[hv] = rv
                elif seen[hv] != rv:
                    bad = True
                    break
            if bad:
                violations += 1
    return violations
