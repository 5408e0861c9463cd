"""Three-term recurrences for path, dumbbell and theta charpolys.

Everything is driven by two sequences in x:

  phi(P_n)  Laplacian charpoly of the path on n vertices
  phi(U_n)  charpoly of the tridiagonal (2, -1) matrix of order n

with phi(P_0) = 0, phi(P_1) = x, phi(U_0) = 1, phi(U_1) = x - 2 and the
shared recurrence  f(n+1) = (x - 2) f(n) - f(n-1).  Running the recurrence
backwards extends phi(U) to phi(U_-1) = 0 and phi(U_-2) = -1, which lets the
dumbbell and theta formulas below absorb their own boundary cases (k = 0
bridge, length-0 chain) without special-casing.

The dumbbell formula goes through the helper polynomial of the "cycle plus
dangling path" block obtained by deleting the first cycle; the theta formula
goes through the helper obtained by deleting one hub.  Both come from
expanding det(xI - L) along the structure of the graph, and both are checked
against the direct matrix route in the tests rather than trusted.
"""

from __future__ import annotations

from .polynomials import IntPoly, LaurentPoly, X, ZERO, substitute_y

_U_NEG = {-1: ZERO, -2: IntPoly.const(-1)}
_U_CACHE = [IntPoly.const(1), IntPoly((-2, 1))]
_PATH_CACHE = [ZERO, X]


def u_poly_rec(n: int) -> IntPoly:
    """phi(U_n) for n >= -2 (negative indices by the backward recurrence)."""
    if n < -2:
        raise ValueError("u_poly_rec needs n >= -2")
    if n < 0:
        return _U_NEG[n]
    while len(_U_CACHE) <= n:
        _U_CACHE.append((X - 2) * _U_CACHE[-1] - _U_CACHE[-2])
    return _U_CACHE[n]


def path_charpoly_rec(n: int) -> IntPoly:
    """phi(L(P_n)) for n >= 0; the zero polynomial at n = 0."""
    if n < 0:
        raise ValueError("path_charpoly_rec needs n >= 0")
    while len(_PATH_CACHE) <= n:
        _PATH_CACHE.append((X - 2) * _PATH_CACHE[-1] - _PATH_CACHE[-2])
    return _PATH_CACHE[n]


def _cycle_block(length: int) -> IntPoly:
    """(x - 3) phi(U_{c-1}) - 2 phi(U_{c-2}) - 2 (-1)^c for a cycle of the
    given length carrying one degree-3 attachment vertex."""
    return (X - 3) * u_poly_rec(length - 1) - 2 * u_poly_rec(length - 2) \
        - IntPoly.const(2 * (-1) ** length)


def dumbbell_helper_poly(q: int, k: int) -> IntPoly:
    """Charpoly of the dumbbell Laplacian block left after deleting the first
    cycle: a q-cycle with a dangling path of k vertices, degrees kept.

    Defined for k >= -1; at k = -1 it degenerates to phi(U_{q-1}), which is
    what the top-level recurrence needs for the k = 0 dumbbell."""
    if q < 3:
        raise ValueError("dumbbell_helper_poly needs q >= 3")
    if k < -1:
        raise ValueError("dumbbell_helper_poly needs k >= -1")
    return _cycle_block(q) * u_poly_rec(k) - u_poly_rec(q - 1) * u_poly_rec(k - 1)


def dumbbell_charpoly_rec(p: int, k: int, q: int) -> IntPoly:
    """phi(L(D(p, k, q))) by the recurrence route.

    Accepts any p, q >= 3 and k >= 0; the formula is symmetric in the two
    cycle roles, so no p >= q normalization is imposed here."""
    if min(p, q) < 3 or k < 0:
        raise ValueError(f"invalid dumbbell parameters (p={p}, k={k}, q={q})")
    return _cycle_block(p) * dumbbell_helper_poly(q, k) \
        - u_poly_rec(p - 1) * dumbbell_helper_poly(q, k - 1)


def theta_helper_poly(r: int, s: int, t: int) -> IntPoly:
    """Charpoly of the theta Laplacian block left after deleting one hub:
    three disjoint paths plus the far hub of degree 3, degrees kept.

    Defined for r, s, t >= -1; a -1 slot collapses that chain into the
    hub-to-hub edge case used by the top-level recurrence."""
    if min(r, s, t) < -1:
        raise ValueError("theta_helper_poly needs r, s, t >= -1")
    ur, us, ut = u_poly_rec(r), u_poly_rec(s), u_poly_rec(t)
    return (X - 3) * ur * us * ut \
        - u_poly_rec(r - 1) * us * ut \
        - ur * u_poly_rec(s - 1) * ut \
        - ur * us * u_poly_rec(t - 1)


def theta_charpoly_rec(r: int, s: int, t: int) -> IntPoly:
    """phi(L(T(r, s, t))) by the recurrence route; r >= s >= t >= 0 with
    (s, t) != (0, 0)."""
    if not (r >= s >= t >= 0) or (s, t) == (0, 0):
        raise ValueError(f"invalid theta parameters (r={r}, s={s}, t={t})")
    return (X - 3) * theta_helper_poly(r, s, t) \
        - theta_helper_poly(r - 1, s, t) \
        - theta_helper_poly(r, s - 1, t) \
        - theta_helper_poly(r, s, t - 1) \
        - 2 * (-1) ** (s + t) * u_poly_rec(r) \
        - 2 * (-1) ** (r + t) * u_poly_rec(s) \
        - 2 * (-1) ** (r + s) * u_poly_rec(t)


# ---------------------------------------------------------------------------
# Closed forms for special values.  These are the quantities the uniqueness
# arguments lean on; each is checked against the recurrences in the tests.

def path_value_at4(n: int) -> int:
    """Closed form phi(L(P_n); 4) = 4n."""
    if n < 0:
        raise ValueError("n >= 0 required")
    return 4 * n


def u_value_at4(n: int) -> int:
    """Closed form phi(U_n; 4) = n + 1."""
    if n < 0:
        raise ValueError("n >= 0 required")
    return n + 1


def u_value_at2(n: int) -> int:
    """Closed form phi(U_n; 2): 0 for odd n, (-1)^(n/2) for even n."""
    if n < 0:
        raise ValueError("n >= 0 required")
    if n % 2:
        return 0
    return (-1) ** (n // 2)


def dumbbell_value_at4(p: int, k: int, q: int) -> int:
    """Closed form for phi(L(D(p, k, q)); 4)."""
    if min(p, q) < 3 or k < 0:
        raise ValueError(f"invalid dumbbell parameters (p={p}, k={k}, q={q})")
    sp = 1 - (-1) ** p
    sq = 1 - (-1) ** q
    return (4 * p * q * k
            - 2 * p * (2 * k + 1) * sq
            - 2 * q * (2 * k + 1) * sp
            + 4 * (k + 1) * sp * sq)


def theta_value_at4(r: int, s: int, t: int) -> int:
    """Closed form for phi(L(T(r, s, t)); 4)."""
    if min(r, s, t) < 0 or sorted((r, s, t))[1] == 0:
        raise ValueError(f"invalid theta parameters (r={r}, s={s}, t={t})")
    est = 1 + (-1) ** (s + t)
    ert = 1 + (-1) ** (r + t)
    ers = 1 + (-1) ** (r + s)
    return (4 * r * s * t
            - 2 * r * est - 2 * s * ert - 2 * t * ers
            - 2 * (1 + (-1) ** (s + t) + (-1) ** (r + t) + (-1) ** (r + s)))


def u_generating_identity_holds(r: int) -> bool:
    """Check (y^(r+2) - y^r) * phi(U_r)|_{x=y+2+1/y} == y^(2r+2) - 1.

    This is the closed form for phi(U_r) in the substitution variable; it is
    the engine behind the y-side identities for both families."""
    if r < 0:
        raise ValueError("r >= 0 required")
    lhs = (LaurentPoly.monomial(r + 2) - LaurentPoly.monomial(r)) \
        * substitute_y(u_poly_rec(r))
    rhs = LaurentPoly.monomial(2 * r + 2) - 1
    return lhs == rhs
