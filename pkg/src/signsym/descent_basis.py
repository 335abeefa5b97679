"""Descent monomial families, ordered monomials, and exponent decomposition.

Four monomial constructors are provided: the plain descent monomial and
its signed variant in the x family alone, and the diagonal versions that
pair statistics of an element with statistics of its inverse across the
two variable families.  The ordered monomials form a transversal of the
averaging orbits; every ordered monomial decomposes as an even part
times a diagonal signed descent monomial, which drives straightening.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .poly import Monomial
from .signed_perm import SignedPermutation, statistics


def _require_positive(pi: SignedPermutation, kind: str) -> None:
    for pos, v in enumerate(pi.window, start=1):
        if v < 0:
            raise ValueError(
                f"{kind} requires an all-positive window; entry {v} at position {pos}"
            )


def descent_monomial(pi: SignedPermutation) -> Monomial:
    """Product of x_{pi(i)}^{d_i(pi)} for a plain permutation pi.

    The total degree equals the major index of pi.
    """
    _require_positive(pi, "descent_monomial")
    st = statistics(pi)
    p = [0] * pi.n
    for i, v in enumerate(pi.window):
        p[v - 1] = st.d[i]
    return Monomial(tuple(p), (0,) * pi.n)


def signed_descent_monomial(sigma: SignedPermutation) -> Monomial:
    """Product of x_{|sigma(i)|}^{f_i(sigma)}; total degree fmaj(sigma)."""
    st = statistics(sigma)
    p = [0] * sigma.n
    for i, v in enumerate(sigma.window):
        p[abs(v) - 1] = st.f[i]
    return Monomial(tuple(p), (0,) * sigma.n)


def diagonal_descent_monomial(pi: SignedPermutation) -> Monomial:
    """Product of x_i^{d_i(pi^-1)} y_{pi(i)}^{d_i(pi)} for plain pi."""
    _require_positive(pi, "diagonal_descent_monomial")
    st = statistics(pi)
    st_inv = statistics(pi.inverse())
    q = [0] * pi.n
    for i, v in enumerate(pi.window):
        q[v - 1] = st.d[i]
    return Monomial(st_inv.d, tuple(q))


def diagonal_signed_descent_monomial(sigma: SignedPermutation) -> Monomial:
    """Product of x_i^{f_i(sigma^-1)} y_{|sigma(i)|}^{f_i(sigma)}.

    Total degree fmaj(sigma) + fmaj(sigma^-1); the result is always an
    ordered monomial, and matching x and y exponents share parity.
    """
    st = statistics(sigma)
    st_inv = statistics(sigma.inverse())
    q = [0] * sigma.n
    for i, v in enumerate(sigma.window):
        q[abs(v) - 1] = st.f[i]
    return Monomial(st_inv.f, tuple(q))


def sign_twist(v: int) -> int:
    """Identity on even integers, negation on odd ones."""
    return v if v % 2 == 0 else -v


def is_ordered(m: Monomial) -> bool:
    """Membership in the ordered transversal.

    Requires every p_k + q_k even and the pairs (p_k, sign_twist(q_k))
    weakly decreasing in lexicographic order.
    """
    if any((pi + qi) % 2 for pi, qi in zip(m.p, m.q)):
        return False
    pairs = [(pi, sign_twist(qi)) for pi, qi in zip(m.p, m.q)]
    return all(pairs[i] >= pairs[i + 1] for i in range(len(pairs) - 1))


def ordered_representative(m: Monomial) -> Monomial:
    """The unique ordered monomial sharing the averaging orbit of ``m``.

    Obtained by sorting the exponent pairs (p_k, sign_twist(q_k)) in
    decreasing order; requires every p_k + q_k even.
    """
    if any((pi + qi) % 2 for pi, qi in zip(m.p, m.q)):
        raise ValueError("monomial has a slot with odd total exponent; its average is zero")
    pairs = sorted(
        zip(m.p, m.q), key=lambda pq: (pq[0], sign_twist(pq[1])), reverse=True
    )
    return Monomial(tuple(pq[0] for pq in pairs), tuple(pq[1] for pq in pairs))


def signed_index_permutation(m: Monomial) -> SignedPermutation:
    """The element sorting the y exponents of an ordered monomial.

    Its window visits positions with q decreasing; a position j appears
    positively when q_j is even and negatively when q_j is odd, and tie
    blocks are arranged with increasing window values.
    """
    if not is_ordered(m):
        raise ValueError("signed index permutation is only defined for ordered monomials")
    signed = [j if m.q[j - 1] % 2 == 0 else -j for j in range(1, m.n + 1)]
    window = tuple(sorted(signed, key=lambda s: (-m.q[abs(s) - 1], s)))
    return SignedPermutation(window)


def order_key(m: Monomial) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sort key realizing the total order on ordered monomials.

    The first component lists both exponent vectors independently sorted
    in decreasing order; the second breaks ties by (p, sign_twist(q)).
    Comparing keys with the usual tuple order compares monomials.
    """
    head = tuple(sorted(m.p, reverse=True)) + tuple(sorted(m.q, reverse=True))
    tail = m.p + tuple(sign_twist(v) for v in m.q)
    return (head, tail)


def compare(m: Monomial, w: Monomial) -> int:
    """Total order on ordered monomials: -1, 0, or 1 for <, =, >.

    Keys equal forces the monomials equal, so this is antisymmetric.
    """
    if m.n != w.n:
        raise ValueError(f"rank mismatch: {m.n} vs {w.n}")
    for arg in (m, w):
        if not is_ordered(arg):
            raise ValueError(f"{arg.text()} is not an ordered monomial")
    km, kw = order_key(m), order_key(w)
    if km < kw:
        return -1
    if km > kw:
        return 1
    return 0


@dataclass(frozen=True)
class Decomposition:
    """Witness of p = 2*nu + delta and q = 2*mu + gamma for an ordered monomial.

    ``sigma`` is the signed index permutation; delta and gamma are the
    flag numbers of sigma^-1 and sigma placed at the matching positions,
    so the source monomial equals x^(2*nu) y^(2*mu) times the diagonal
    signed descent monomial of sigma.
    """

    sigma: SignedPermutation
    nu: tuple[int, ...]
    delta: tuple[int, ...]
    mu: tuple[int, ...]
    gamma: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma.window),
            "nu": list(self.nu),
            "delta": list(self.delta),
            "mu": list(self.mu),
            "gamma": list(self.gamma),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        return cls(
            SignedPermutation(tuple(data["sigma"])),
            tuple(data["nu"]),
            tuple(data["delta"]),
            tuple(data["mu"]),
            tuple(data["gamma"]),
        )


def _check(condition: bool, message: str) -> None:
    # The decomposition facts always hold for ordered inputs; a failure
    # here means a statistics bug upstream and must not be suppressed.
    if not condition:
        raise RuntimeError(f"internal decomposition invariant violated: {message}")


def decompose(m: Monomial) -> Decomposition:
    """Split an ordered monomial as x^(2*nu) y^(2*mu) times a descent monomial.

    All structural facts (evenness and non-negativity of the halved
    parts, the monotonicity of each sequence, and the tie conditions)
    are revalidated at runtime and raise RuntimeError on violation.
    """
    if not is_ordered(m):
        raise ValueError("decompose is only defined for ordered monomials")
    sigma = signed_index_permutation(m)
    st = statistics(sigma)
    st_inv = statistics(sigma.inverse())
    n = m.n

    delta = st_inv.f
    gamma = [0] * n
    for i, v in enumerate(sigma.window):
        gamma[abs(v) - 1] = st.f[i]
    gamma = tuple(gamma)

    nu = []
    mu = []
    for i in range(n):
        rest_p = m.p[i] - delta[i]
        _check(rest_p >= 0 and rest_p % 2 == 0, f"p - delta not even non-negative at slot {i + 1}")
        nu.append(rest_p // 2)
        rest_q = m.q[i] - gamma[i]
        _check(rest_q >= 0 and rest_q % 2 == 0, f"q - gamma not even non-negative at slot {i + 1}")
        mu.append(rest_q // 2)
    nu = tuple(nu)
    mu = tuple(mu)

    _check(all(nu[i] >= nu[i + 1] for i in range(n - 1)), "nu not weakly decreasing")
    _check(all(delta[i] >= delta[i + 1] for i in range(n - 1)), "delta not weakly decreasing")
    along_sigma = [abs(v) - 1 for v in sigma.window]
    _check(
        all(mu[along_sigma[i]] >= mu[along_sigma[i + 1]] for i in range(n - 1)),
        "mu not weakly decreasing along sigma",
    )
    _check(
        all(gamma[along_sigma[i]] >= gamma[along_sigma[i + 1]] for i in range(n - 1)),
        "gamma not weakly decreasing along sigma",
    )
    for i in range(n):
        for j in range(i + 1, n):
            if delta[i] == delta[j]:
                _check(
                    sign_twist(m.q[i]) >= sign_twist(m.q[j]),
                    f"delta tie at slots {i + 1},{j + 1} breaks the twist order",
                )
            if gamma[i] == gamma[j]:
                _check(
                    sign_twist(m.q[i]) >= sign_twist(m.q[j]),
                    f"gamma tie at slots {i + 1},{j + 1} breaks the twist order",
                )
    return Decomposition(sigma, nu, delta, mu, gamma)


def partitions_fixed_length(total: int, length: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of ``length`` non-negative integers summing to ``total``."""
    if total < 0:
        return
    if length == 0:
        if total == 0:
            yield ()
        return
    hi = total if cap is None else min(total, cap)
    lo = -(-total // length)  # smallest feasible first part
    for first in range(hi, lo - 1, -1):
        for rest in partitions_fixed_length(total - first, length - 1, first):
            yield (first,) + rest


def _parity_compositions(total: int, parities: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Compositions of `total` with slot i congruent to parities[i] mod 2.
    if not parities:
        if total == 0:
            yield ()
        return
    start = parities[0] % 2
    for v in range(start, total + 1, 2):
        for rest in _parity_compositions(total - v, parities[1:]):
            yield (v,) + rest


def ordered_monomials(n: int, a: int, b: int) -> Iterator[Monomial]:
    """All ordered monomials of rank n with x-degree a and y-degree b."""
    if a < 0 or b < 0:
        return
    for p in partitions_fixed_length(a, n):
        for q in _parity_compositions(b, p):
            m = Monomial(p, q)
            if is_ordered(m):
                yield m
