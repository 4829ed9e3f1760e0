"""Twisted 1-cocycle conditions and exact coboundary solving.

A family v = (v_i)_{i in I} of ring elements is a coboundary if there is a
single B with (1 - s_i)B = v_i for all i.  Necessary conditions checked by
check_cocycle: (1 + s_i)v_i = 0, and for each finite dihedral pair the two
alternating partial sums over the subgroup agree.  solve_coboundary finds B
supported in a level window by exact sparse elimination over Q(q); existence
inside the window is what the vanishing theory guarantees, and a constructive
chamber-by-chamber elimination would be a workable alternative strategy, but a
generic solve plus mandatory verification is simpler and self-checking.
"""

from .coefq import CoefQ, ONE, ZERO
from .errors import (CocycleViolation, Inconsistent, SupportGrowthExceeded,
                     WindowViolation)
from .kring import KElement, k_zero, reflect_act, weyl_act
from . import weyl as weyl_mod

MAX_GROW = 8


def _family(cd, v):
    """Fill missing labels with zero; sanity-check the index set."""
    full = {}
    for i in cd.labels:
        vi = v.get(i)
        full[i] = vi if vi is not None else k_zero(cd)
    return full


def check_cocycle(cd, v):
    """Returns a list of violations, empty iff the conditions hold.

    Each violation is (kind, where, residual): kind "self" with where = i for
    v_i + s_i v_i != 0, kind "dihedral" with where = (i, j) for a failed
    alternating-sum identity (infinite-order pairs are skipped).
    """
    v = _family(cd, v)
    violations = []
    for i in cd.labels:
        r = v[i] + reflect_act(cd, i, v[i])
        if not r.is_zero():
            violations.append(("self", i, r))
    for i in cd.labels:
        for j in cd.labels:
            if j <= i:
                continue
            m = cd.orders[(i, j)]
            if m is None:
                continue
            lhs = _alternating_sum(cd, i, j, m, v[i])
            rhs = _alternating_sum(cd, j, i, m, v[j])
            r = lhs - rhs
            if not r.is_zero():
                violations.append(("dihedral", (i, j), r))
    return violations


def _alternating_sum(cd, i, j, m, vi):
    """sum over x in W_{ij} with x s_i > x of (-1)^len(x) * x(v_i): the m
    such x are e and the alternating words ending in j of length < m."""
    total = vi  # x = e
    for k in range(1, m):
        word = tuple(j if (k - 1 - t) % 2 == 0 else i for t in range(k))
        x = weyl_mod.canonicalize(cd, word)
        term = weyl_act(x, vi)
        total = total - term if k % 2 else total + term
    return total


def _sigma(cd, i, mu):
    """normalize(s_i mu) = (twist, key)."""
    return cd.normalize(cd.reflect(i, mu))


def solve_coboundary(cd, v, window, order_reversed=False, precheck=None,
                     max_grow=MAX_GROW):
    """Find B with (1 - s_i)B = v_i for all i, supported in the level window
    (lo, hi].  The window width must not exceed the dual Coxeter number.

    Unknowns are coefficients on an adaptively grown support: the union of the
    v_i supports closed k times under all normalized reflections, k = 1, 2, ..
    until the linear system is consistent (SupportGrowthExceeded after
    max_grow rounds).  Solutions are not unique; free coefficients are fixed
    to zero, deterministically in the chosen term order.  The returned B is
    re-verified by substitution.
    """
    v = _family(cd, v)
    lo, hi = window
    if hi - lo > cd.dual_coxeter:
        raise WindowViolation("window width %d exceeds dual Coxeter number %d"
                              % (hi - lo, cd.dual_coxeter))
    for i, vi in v.items():
        for mu in vi.terms:
            if not lo < cd.level(mu) <= hi:
                raise WindowViolation("v_%d has a term at level %d outside (%d, %d]"
                                      % (i, cd.level(mu), lo, hi))
    if precheck is None:
        precheck = __debug__
    if precheck:
        violations = check_cocycle(cd, v)
        if violations:
            raise CocycleViolation(violations)

    base = set()
    for vi in v.values():
        base.update(vi.terms)
    if not base:
        return k_zero(cd)

    support = set(base)
    solvable = False
    for rounds in range(1, max_grow + 1):
        grown = set(support)
        for mu in support:
            for i in cd.labels:
                grown.add(_sigma(cd, i, mu)[1])
        support = grown
        sol = _solve_on_support(cd, v, support, order_reversed)
        if sol is not None:
            solvable = True
            B = KElement(cd, sol)
            if all((B - reflect_act(cd, i, B) - v[i]).is_zero()
                   for i in cd.labels):
                return B
    if not solvable:
        raise Inconsistent(
            "coboundary system insolvable after %d support-growth rounds"
            % max_grow)
    raise SupportGrowthExceeded(
        "no verified coboundary within %d support-growth rounds" % max_grow)


def _solve_on_support(cd, v, support, order_reversed):
    """Exact sparse Gauss-Jordan over CoefQ for B supported on `support`.
    Returns dict weight -> CoefQ, or None if inconsistent."""
    key = lambda mu: (cd.level(mu), mu.l, mu.m)
    variables = sorted(support, key=key, reverse=order_reversed)
    var_pos = {mu: p for p, mu in enumerate(variables)}

    rows = []  # (coeffs: dict var_pos -> CoefQ, rhs: CoefQ)
    for i in cd.labels:
        vi = v[i]
        seen_keys = set()
        for mu in variables:
            for key_mu in (mu, _sigma(cd, i, mu)[1]):
                if key_mu in seen_keys:
                    continue
                seen_keys.add(key_mu)
                coeffs = {}
                if key_mu in var_pos:
                    coeffs[var_pos[key_mu]] = ONE
                n, sig = _sigma(cd, i, key_mu)
                if sig in var_pos:
                    c = -CoefQ.q_power(-n)
                    p = var_pos[sig]
                    prev = coeffs.get(p)
                    c = c if prev is None else prev + c
                    if c.is_zero():
                        coeffs.pop(p, None)
                    else:
                        coeffs[p] = c
                rhs = vi.terms.get(key_mu, ZERO)
                if coeffs:
                    rows.append((coeffs, rhs))
                elif not rhs.is_zero():
                    return None
    return _eliminate(rows, len(variables), variables)


def _eliminate(rows, nvars, variables):
    """Deterministic sparse Gauss-Jordan; pivots chosen by (row sparsity,
    coefficient complexity, variable order).  Returns the solution with free
    variables zero, or None if inconsistent."""
    col_rows = [set() for _ in range(nvars)]
    for r, (coeffs, _) in enumerate(rows):
        for p in coeffs:
            col_rows[p].add(r)
    active = set(range(len(rows)))
    pivots = []  # (row index, var pos)

    while True:
        best = None
        for r in active:
            coeffs, rhs = rows[r]
            if not coeffs:
                continue
            cand_p = min(coeffs, key=lambda p: (rows[r][0][p].complexity(), p))
            score = (len(coeffs), rows[r][0][cand_p].complexity(), r)
            if best is None or score < best[0]:
                best = (score, r, cand_p)
        if best is None:
            break
        _, r, p = best
        coeffs, rhs = rows[r]
        inv = coeffs[p].inv()
        coeffs = {pp: cc * inv for pp, cc in coeffs.items()}
        rhs = rhs * inv
        rows[r] = (coeffs, rhs)
        active.discard(r)
        pivots.append((r, p))
        for r2 in list(col_rows[p]):
            if r2 == r:
                continue
            coeffs2, rhs2 = rows[r2]
            factor = coeffs2.get(p)
            if factor is None:
                continue
            new2 = dict(coeffs2)
            for pp, cc in coeffs.items():
                cur = new2.get(pp)
                val = -factor * cc if cur is None else cur - factor * cc
                if val.is_zero():
                    if pp in new2:
                        del new2[pp]
                        col_rows[pp].discard(r2)
                else:
                    if cur is None:
                        col_rows[pp].add(r2)
                    new2[pp] = val
            rows[r2] = (new2, rhs2 - factor * rhs)

    for r in active:
        coeffs, rhs = rows[r]
        if not coeffs and not rhs.is_zero():
            return None

    solution = {}
    for r, p in pivots:
        coeffs, rhs = rows[r]
        # after full elimination the pivot row holds only its pivot and free
        # variables; free variables are zero
        if not rhs.is_zero():
            solution[variables[p]] = rhs
    return solution
