"""Exact counting bounds for the triangle and one-factor demand families.

Everything that decides feasibility is integer or :class:`~fractions.Fraction`
arithmetic.  The only irrational quantity, ``n / (4 + 2*sqrt(3))``, is a
display-only reference line.

``feasible_by_counting`` is one-directional: ``False`` means no realization
can exist, ``True`` only means the counting did not rule one out.

Soundness of the strengthened cherry bound
------------------------------------------
For the triangle demand every length-1 path and every cherry whose middle
lies in the demand edge's own triple consumes at least one of the ``n``
intra-triple host edges, so there are at most ``n`` such *short*
realizations, each using at least one edge.  Every other instance uses two
edges (a cherry through another triple) or at least three.  With ``s <= n``
short instances and ``t2`` inter-triple cherries::

    s + 2*t2 + 3*(e - s - t2) <= n(n-1)/2   =>   t2 >= n/2 * (3q - n - 3)

The plain form ``n/2 * (3q - n - 5)`` drops the ``s`` term; both are kept.
Feeding the stronger bound into the pigeonhole step refutes every even
``q > 13n/27 + 5/9``, whereas the plain chain only reaches ``13n/27 + 11/9``.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import asdict, dataclass
from fractions import Fraction

CS_LOWER_TOL = 1e-12


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_triangle_params(n: int, q: int) -> None:
    if n <= 0 or n % 3:
        raise ValueError(f"n must be a positive multiple of 3, got {n}")
    if q < 0 or q % 2:
        raise ValueError(f"q must be a nonnegative even integer, got {q}")


def edge_count_feasible(n: int, q: int, lengths: Mapping[int, int]) -> bool:
    """Can a path-length histogram fit into the ``n(n-1)/2`` edges of K_n?"""
    if 2 * sum(lengths.values()) != n * q:
        raise ValueError(
            f"histogram covers {sum(lengths.values())} instances, expected nq/2 = {Fraction(n * q, 2)}"
        )
    used = sum(length * count for length, count in lengths.items())
    return used <= n * (n - 1) // 2


def cherry_lower_bound(n: int, q: int) -> int:
    """Minimum number of length-2 paths, ``max(0, ceil(n(3q-n-5)/2))``."""
    _check_triangle_params(n, q)
    return max(0, _ceil_div(n * (3 * q - n - 5), 2))


def cherry_lower_bound_tight(n: int, q: int) -> int:
    """Minimum number of inter-triple cherries, ``max(0, ceil(n(3q-n-3)/2))``."""
    _check_triangle_params(n, q)
    return max(0, _ceil_div(n * (3 * q - n - 3), 2))


def triangle_q_upper_bound(n: int) -> Fraction:
    if n <= 0 or n % 3:
        raise ValueError(f"n must be a positive multiple of 3, got {n}")
    return Fraction(13 * n, 27) + 1


def one_factor_q_upper_bound(n: int) -> Fraction:
    """``n/2``: with ``n/2`` single-edge routes and two edges for each other
    instance, ``n/2 + 2(nq/2 - n/2) <= n(n-1)/2`` forces ``q <= n/2``."""
    if n <= 0 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")
    return Fraction(n, 2)


def pair_cherry_capacity(n: int) -> int:
    """Cherries one triple can share with all others: 4 per other triple."""
    if n <= 0 or n % 3:
        raise ValueError(f"n must be a positive multiple of 3, got {n}")
    return 4 * (n // 3 - 1)


def min_edge_use(n: int, q: int) -> int:
    """Fewest host edges any realization of ``triangle_demand(n, q)`` can use."""
    e = n * q // 2
    return e + max(0, e - n)


def reference_lines(n: int) -> dict:
    return {
        "cs_lower": n / (4 + 2 * math.sqrt(3)),
        "tpc_lower": Fraction(n, 3),
        "bip_lower": Fraction(n, 4),
        "bip_upper": Fraction(n, 3),
    }


@dataclass(frozen=True)
class BoundsReport:
    n: int
    q: int
    e_demand: int
    host_edges: int
    t_min: int
    t_min_tight: int
    sum_alpha_beta_min: int
    per_triangle_min: int
    pair_cap_total: int
    min_edge_use: int
    paper_chain_refutes: bool
    tight_chain_refutes: bool
    edge_use_refutes: bool
    feasible_by_counting: bool
    q_max_triangle: Fraction
    q_max_one_factor: Fraction
    reference_lines: dict

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return {"num": x.numerator, "den": x.denominator}
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x

        doc = {k: enc(v) for k, v in asdict(self).items()}
        doc["reference_lines"]["cs_lower"] = {
            "value": self.reference_lines["cs_lower"],
            "approximate": True,
            "tolerance": CS_LOWER_TOL,
        }
        return doc


def bounds_report(n: int, q: int) -> BoundsReport:
    _check_triangle_params(n, q)
    e = n * q // 2
    host_edges = n * (n - 1) // 2
    pair_cap = pair_cherry_capacity(n)
    t_tight = cherry_lower_bound_tight(n, q)
    sum_ab = 2 * t_tight
    per_tri = _ceil_div(sum_ab, n // 3)
    paper_refutes = 3 * (3 * q - n - 5) > pair_cap
    tight_refutes = per_tri > pair_cap
    use = min_edge_use(n, q)
    use_refutes = use > host_edges
    return BoundsReport(
        n=n,
        q=q,
        e_demand=e,
        host_edges=host_edges,
        t_min=cherry_lower_bound(n, q),
        t_min_tight=t_tight,
        sum_alpha_beta_min=sum_ab,
        per_triangle_min=per_tri,
        pair_cap_total=pair_cap,
        min_edge_use=use,
        paper_chain_refutes=paper_refutes,
        tight_chain_refutes=tight_refutes,
        edge_use_refutes=use_refutes,
        feasible_by_counting=not (paper_refutes or tight_refutes or use_refutes),
        q_max_triangle=triangle_q_upper_bound(n),
        q_max_one_factor=Fraction(n, 2),
        reference_lines=reference_lines(n),
    )
