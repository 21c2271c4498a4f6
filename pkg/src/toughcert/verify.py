"""Certification and exhaustive verification harnesses.

``certify`` applies the spectral sufficient condition to one graph and
reports a verdict.  ``verify_theorem`` checks the condition against
every connected labeled graph of a small order by exhaustive scan:
graphs are integers (one bit per vertex pair), toughness comes from
precomputed component-count tables applied to whole mask ranges at
once, and the spectral side only solves eigenproblems for graphs whose
cheap degree/edge bounds cannot already separate them from the
threshold.  Workers split the mask range into chunks; chunk results
are merged in range order so reports are byte-identical for any worker
count.

The remaining ``verify_*`` suites exercise the supporting facts the
certification rests on: the join-of-cliques maximizer inequality, the
equitable-quotient eigenvalue embedding, strict monotonicity of the
spectral radius under proper connected subgraphs, and the polynomial
identities tying the quotient cubic to the certification cubic.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import get_context

import numpy as np

from .errors import DomainError, HypothesisError, SizeLimitError
from .graphs import (
    Graph,
    _component_count,
    _extremal_core,
    _reach,
    from_edges,
    is_connected,
    is_extremal,
    to_graph6,
)
from .spectral import adjacency_matrix, full_spectrum, quotient_spectrum, is_equitable, spectral_radius
from .thresholds import (
    JoinCliqueSpec,
    build_join_cliques,
    complete_split_radius,
    gap_bound,
    gap_factor,
    quotient_cubic,
    threshold,
    threshold_cubic,
)
from .toughness import is_one_over_t_tough

__all__ = [
    "VERDICT_TOUGH",
    "VERDICT_EXCEPTIONAL",
    "VERDICT_INCONCLUSIVE",
    "CertificateReport",
    "VerificationSummary",
    "certify",
    "enumerate_connected",
    "graph_from_mask",
    "mask_of_graph",
    "verify_theorem",
    "verify_join_maximizer",
    "verify_quotient_embedding",
    "verify_subgraph_monotonicity",
    "verify_threshold_identities",
    "report_lines",
    "write_report",
]

VERDICT_TOUGH = "certified-tough"
VERDICT_EXCEPTIONAL = "exceptional"
VERDICT_INCONCLUSIVE = "inconclusive"

# orders above this are rejected by the exhaustive scans unless the
# caller opts in explicitly (the order-8 scan touches 2^28 masks)
_SCAN_DEFAULT_MAX = 7
_SCAN_HARD_MAX = 8


def _round12(x: float) -> float:
    """Floats destined for reports, cut to 12 significant digits so the
    serialized form is stable."""
    return float(f"{float(x):.12g}")


def _edge_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the set bits of ``mask`` in the
    lexicographic pair order (0,1), (0,2), ..., (n-2,n-1)."""
    adj = [0] * n
    for e, (i, j) in enumerate(_edge_order(n)):
        if mask >> e & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def mask_of_graph(g: Graph) -> int:
    mask = 0
    for e, (i, j) in enumerate(_edge_order(g.n)):
        if g.adj[i] >> j & 1:
            mask |= 1 << e
    return mask


def enumerate_connected(n: int):
    """Yield every connected labeled graph of order ``n`` in increasing
    edge-mask order.  Guarded at order 8 (2^28 masks)."""
    if not isinstance(n, int) or n < 1:
        raise DomainError("order must be a positive integer")
    if n > _SCAN_HARD_MAX:
        raise SizeLimitError(f"exhaustive enumeration capped at order {_SCAN_HARD_MAX}")
    order = _edge_order(n)
    full = (1 << n) - 1
    for mask in range(1 << len(order)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            e = low.bit_length() - 1
            m ^= low
            i, j = order[e]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        if _reach(tuple(adj), 1, full) == full:
            yield Graph(n, tuple(adj))


# -- single-graph certification -------------------------------------------


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of the spectral test on one graph."""

    graph6: str
    t: int
    n: int
    lambda1: float
    threshold: float
    verdict: str
    epsilon: float
    cross_check: dict | None = None

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "t": self.t,
            "n": self.n,
            "lambda1": _round12(self.lambda1),
            "threshold": _round12(self.threshold),
            "verdict": self.verdict,
            "epsilon": self.epsilon,
            "cross_check": self.cross_check,
        }


def certify(
    g: Graph,
    t: int,
    epsilon: float = 1e-9,
    tol: float = 1e-12,
    cross_check: bool | None = None,
) -> CertificateReport:
    """Apply the spectral sufficient condition for 1/t-toughness.

    Verdicts: ``certified-tough`` when the largest adjacency eigenvalue
    clears the threshold and the graph is not the known sharpness
    example; ``exceptional`` when it is that example (which is not
    1/t-tough despite meeting the threshold); ``inconclusive`` when the
    eigenvalue falls short, in which case the condition simply does not
    apply.  ``cross_check=None`` runs the exact toughness oracle
    automatically for orders <= 10; ``True`` forces it (subject to the
    exhaustive limit); ``False`` skips it.
    """
    if not isinstance(t, int) or t < 1:
        raise HypothesisError("t must be a positive integer")
    if g.n < t + 2:
        raise HypothesisError(f"order {g.n} below t + 2 = {t + 2}")
    if not is_connected(g):
        raise HypothesisError("certification requires a connected graph")
    lam = spectral_radius(g, tol=tol)
    eta = threshold(t, g.n).value
    if lam < eta - epsilon:
        verdict = VERDICT_INCONCLUSIVE
    elif is_extremal(g, t):
        verdict = VERDICT_EXCEPTIONAL
    else:
        verdict = VERDICT_TOUGH
    cross: dict | None = None
    if cross_check or (cross_check is None and g.n <= 10):
        tough, witness = is_one_over_t_tough(g, t)
        cross = {"tough": tough, "witness": list(witness) if witness else None}
        if verdict == VERDICT_TOUGH and not tough:
            raise ArithmeticError(
                "certificate contradicts the exhaustive toughness oracle"
            )
        if verdict == VERDICT_EXCEPTIONAL and tough:
            raise ArithmeticError(
                "sharpness example came out tough under the exhaustive oracle"
            )
    return CertificateReport(
        to_graph6(g), t, g.n, lam, eta, verdict, epsilon, cross
    )


# -- summaries and reports --------------------------------------------------


@dataclass
class VerificationSummary:
    """Result of one verification suite.

    ``failures`` are violations of the checked statement; ``incidents``
    are non-fatal observations (tolerance-band hits, logged
    curiosities).  ``elapsed`` is wall time and deliberately excluded
    from serialized reports so report bytes are reproducible.
    """

    check: str
    scope: dict
    counts: dict
    failures: list = field(default_factory=list)
    incidents: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    elapsed: float | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def report_lines(summary: VerificationSummary) -> list[str]:
    """Serialize a summary as JSON lines: every failure, every incident,
    then one closing summary record.  Deterministic byte-for-byte."""
    lines = []
    for rec in summary.failures:
        lines.append(json.dumps({"record": "failure", **rec}, sort_keys=True))
    for rec in summary.incidents:
        lines.append(json.dumps({"record": "incident", **rec}, sort_keys=True))
    closing = {
        "record": "summary",
        "check": summary.check,
        "scope": summary.scope,
        "counts": summary.counts,
        "failure_count": len(summary.failures),
        "incident_count": len(summary.incidents),
        "ok": summary.ok,
    }
    if summary.extras:
        closing["extras"] = summary.extras
    lines.append(json.dumps(closing, sort_keys=True))
    return lines


def write_report(summary: VerificationSummary, stream) -> None:
    for line in report_lines(summary):
        stream.write(line + "\n")


# -- exhaustive theorem scan ------------------------------------------------

_TABLES: dict[int, np.ndarray] = {}


def _comps_table(r: int) -> np.ndarray:
    """Component counts of every labeled graph of order ``r``, indexed
    by edge mask.  uint8, built once per process."""
    tab = _TABLES.get(r)
    if tab is not None:
        return tab
    order = _edge_order(r)
    out = np.empty(1 << len(order), dtype=np.uint8)
    for mask in range(out.size):
        adj = [0] * r
        m = mask
        while m:
            low = m & -m
            e = low.bit_length() - 1
            m ^= low
            i, j = order[e]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        out[mask] = _component_count(tuple(adj), (1 << r) - 1)
    _TABLES[r] = out
    return out


def _scan_chunk(args) -> dict:
    """Scan one contiguous edge-mask range for one (n, t).

    Pure function of its arguments, so chunk boundaries and worker
    counts cannot change the merged result.
    """
    (n, t, lo, hi, eta, eps_eq, eps_strict, tol, log_curiosities) = args
    order = _edge_order(n)
    edge_pos = {(i, j): e for e, (i, j) in enumerate(order)}
    masks = np.arange(lo, hi, dtype=np.int64)

    # per-vertex neighbor bitmasks for the whole range at once
    adjs = np.zeros((n, masks.size), dtype=np.uint8)
    for e, (i, j) in enumerate(order):
        bit = ((masks >> e) & 1).astype(np.uint8)
        adjs[i] |= bit << j
        adjs[j] |= bit << i

    # connectivity: grow the reachable set of vertex 0 n-1 times
    reach = np.ones(masks.size, dtype=np.uint8)
    for _ in range(n - 1):
        for v in range(n):
            has = (reach >> v) & np.uint8(1)
            reach |= adjs[v] * has
    sel = np.nonzero(reach == np.uint8((1 << n) - 1))[0]
    cmasks = masks[sel]
    cadj = adjs[:, sel]
    ngraphs = int(cmasks.size)

    # exact toughness side: a graph fails 1/t-toughness iff some cut of
    # size <= (n-1)/(t+1) leaves at least t*size + 1 components; the
    # component count of the induced remainder comes from a table over
    # the induced edge bits
    violated = np.zeros(ngraphs, dtype=bool)
    for size in range(1, (n - 1) // (t + 1) + 1):
        r = n - size
        table = _comps_table(r)
        sub_order = _edge_order(r)
        cmax = np.zeros(ngraphs, dtype=np.uint8)
        for combo in combinations(range(n), size):
            keep = [v for v in range(n) if v not in combo]
            induced = np.zeros(ngraphs, dtype=np.int64)
            for k, (a, b) in enumerate(sub_order):
                e = edge_pos[(keep[a], keep[b])]
                induced |= ((cmasks >> e) & 1) << k
            np.maximum(cmax, table[induced], out=cmax)
        violated |= cmax >= t * size + 1

    degs = np.vstack([np.bitwise_count(cadj[v]) for v in range(n)])

    # recognize sharpness-example labelings: degree profile first, then
    # the structural test on the few candidates
    expected = Counter({n - 1: 1})
    expected[n - t - 1] += n - t - 1
    expected[1] += t
    cand = np.ones(ngraphs, dtype=bool)
    for d, cnt in expected.items():
        cand &= (degs == d).sum(axis=0) == cnt

    failures: list[dict] = []
    incidents: list[dict] = []
    exceptional = np.zeros(ngraphs, dtype=bool)
    exceptional_g6: list[str] = []
    eigensolves = 0

    def ctx(i: int, lam: float | None = None) -> dict:
        rec = {
            "check": "theorem",
            "n": n,
            "t": t,
            "graph6": to_graph6(graph_from_mask(n, int(cmasks[i]))),
            "threshold": _round12(eta),
        }
        if lam is not None:
            rec["lambda1"] = _round12(lam)
        return rec

    for i in np.nonzero(cand)[0]:
        rows = tuple(int(cadj[v, i]) for v in range(n))
        if not _extremal_core(rows, n, t):
            continue
        if violated[i]:
            exceptional[i] = True
        else:
            failures.append(
                {**ctx(int(i)), "kind": "extremal-tough",
                 "detail": "sharpness example came out 1/t-tough"}
            )

    # spectral side for graphs that fail toughness: cheap upper bounds
    # (max degree, and sqrt(2m - n + 1)) rule most of them out without
    # an eigensolve
    mcounts = np.bitwise_count(cmasks).astype(np.float64)
    maxdeg = degs.max(axis=0).astype(np.float64)
    ub = np.minimum(maxdeg, np.sqrt(np.maximum(2.0 * mcounts - n + 1.0, 0.0)))
    needs = violated & ~exceptional & (ub >= eta - eps_strict)
    bound_skips = int((violated & ~exceptional & ~needs).sum())
    for i in np.nonzero(needs)[0]:
        lam = spectral_radius(graph_from_mask(n, int(cmasks[i])), tol=tol)
        eigensolves += 1
        if lam > eta + eps_eq:
            failures.append(
                {**ctx(int(i), lam), "kind": "spectral-bound",
                 "detail": "non-tough non-extremal graph at or above the threshold"}
            )
        elif lam >= eta - eps_strict:
            incidents.append(
                {**ctx(int(i), lam), "kind": "tolerance-band",
                 "detail": "eigenvalue within the ambiguity band of the threshold"}
            )

    for i in np.nonzero(exceptional)[0]:
        lam = spectral_radius(graph_from_mask(n, int(cmasks[i])), tol=tol)
        eigensolves += 1
        g6 = to_graph6(graph_from_mask(n, int(cmasks[i])))
        exceptional_g6.append(g6)
        if abs(lam - eta) > eps_eq:
            failures.append(
                {**ctx(int(i), lam), "kind": "sharpness",
                 "detail": "sharpness example eigenvalue differs from the threshold"}
            )

    if log_curiosities:
        lb = np.maximum(2.0 * mcounts / n, np.sqrt(maxdeg))
        near = ~violated & (ub >= eta - eps_eq) & (lb <= eta + eps_eq)
        for i in np.nonzero(near)[0]:
            lam = spectral_radius(graph_from_mask(n, int(cmasks[i])), tol=tol)
            eigensolves += 1
            if abs(lam - eta) <= eps_eq:
                incidents.append(
                    {**ctx(int(i), lam), "kind": "equality-curiosity",
                     "detail": "tough graph with eigenvalue at the threshold"}
                )

    return {
        "lo": lo,
        "hi": hi,
        "connected": ngraphs,
        "tough": int((~violated).sum()),
        "not_tough": int(violated.sum()),
        "exceptional_masks": [int(x) for x in cmasks[exceptional]],
        "exceptional_g6": exceptional_g6,
        "eigensolves": eigensolves,
        "bound_skips": bound_skips,
        "failures": failures,
        "incidents": incidents,
    }


def verify_theorem(
    n: int,
    t: int,
    workers: int = 1,
    eps_eq: float = 1e-9,
    eps_strict: float = 1e-9,
    tol: float = 1e-12,
    log_curiosities: bool = False,
    allow_order_8: bool = False,
    chunk_size: int = 1 << 18,
) -> VerificationSummary:
    """Check the sufficient condition against every connected labeled
    graph of order ``n`` for the given ``t``.

    For each graph exactly one of three things must hold: it is
    1/t-tough (no spectral claim is made), it is a labeling of the
    sharpness example (eigenvalue equal to the threshold within
    ``eps_eq``), or its largest eigenvalue is below threshold by more
    than ``eps_strict``.  Anything else is recorded as a failure;
    eigenvalues inside the ambiguity band are recorded as incidents.
    Order 8 must be enabled explicitly via ``allow_order_8``.
    """
    if not isinstance(t, int) or t < 1:
        raise DomainError("t must be a positive integer")
    if not isinstance(n, int) or n < t + 2:
        raise DomainError(f"order n must be an integer >= t + 2 = {t + 2}")
    cap = _SCAN_HARD_MAX if allow_order_8 else _SCAN_DEFAULT_MAX
    if n > cap:
        raise SizeLimitError(
            f"order {n} exceeds the scan cap {cap}"
            + ("" if allow_order_8 else " (pass allow_order_8 to push to 8)")
        )
    started = time.perf_counter()
    eta = threshold(t, n).value
    total = 1 << (n * (n - 1) // 2)
    ranges = [(lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)]
    argv = [
        (n, t, lo, hi, eta, eps_eq, eps_strict, tol, log_curiosities)
        for lo, hi in ranges
    ]
    if workers > 1 and len(argv) > 1:
        # warm the component tables before forking so children inherit them
        for size in range(1, (n - 1) // (t + 1) + 1):
            _comps_table(n - size)
        with get_context("fork").Pool(workers) as pool:
            results = pool.map(_scan_chunk, argv)
    else:
        results = [_scan_chunk(a) for a in argv]

    counts = {
        "masks": total,
        "connected": 0,
        "tough": 0,
        "not_tough": 0,
        "exceptional": 0,
        "eigensolves": 0,
        "bound_skips": 0,
    }
    failures: list[dict] = []
    incidents: list[dict] = []
    exceptional_masks: list[int] = []
    exceptional_g6: list[str] = []
    for res in results:
        counts["connected"] += res["connected"]
        counts["tough"] += res["tough"]
        counts["not_tough"] += res["not_tough"]
        counts["exceptional"] += len(res["exceptional_masks"])
        counts["eigensolves"] += res["eigensolves"]
        counts["bound_skips"] += res["bound_skips"]
        failures.extend(res["failures"])
        incidents.extend(res["incidents"])
        exceptional_masks.extend(res["exceptional_masks"])
        exceptional_g6.extend(res["exceptional_g6"])

    return VerificationSummary(
        check="theorem",
        scope={"n": n, "t": t, "eps_eq": eps_eq, "eps_strict": eps_strict},
        counts=counts,
        failures=failures,
        incidents=incidents,
        extras={
            "exceptional_graph6": exceptional_g6,
            "exceptional_masks": exceptional_masks,
        },
        elapsed=time.perf_counter() - started,
    )


# -- supporting-fact suites --------------------------------------------------


def _partitions_desc(total: int, parts: int, cap: int | None = None):
    """Nonincreasing ``parts``-tuples of positive integers summing to
    ``total``, in descending lexicographic order."""
    if parts == 1:
        if total >= 1 and (cap is None or total <= cap):
            yield (total,)
        return
    first_hi = total - (parts - 1)
    if cap is not None:
        first_hi = min(first_hi, cap)
    first_lo = -(-total // parts)
    for first in range(first_hi, first_lo - 1, -1):
        for rest in _partitions_desc(total - first, parts - 1, first):
            yield (first,) + rest


def verify_join_maximizer(
    n: int, s: int, c: int, eps: float = 1e-9, tol: float = 1e-12
) -> VerificationSummary:
    """Among all K_s v (K_{p1} u ... u K_{pc}) of order ``n`` with ``c``
    clique parts, the shape (n-s-c+1, 1, ..., 1) uniquely maximizes the
    largest adjacency eigenvalue.  Checks the inequality and that
    near-equality happens only at that shape."""
    if not (isinstance(n, int) and isinstance(s, int) and isinstance(c, int)):
        raise DomainError("n, s, c must be integers")
    if s < 1 or c < 1 or n < s + c:
        raise DomainError("need s >= 1, c >= 1 and n >= s + c")
    started = time.perf_counter()
    best_shape = (n - s - c + 1,) + (1,) * (c - 1)
    best = spectral_radius(build_join_cliques(JoinCliqueSpec(s, best_shape)), tol=tol)
    failures: list[dict] = []
    checked = 0
    for shape in _partitions_desc(n - s, c):
        lam = spectral_radius(build_join_cliques(JoinCliqueSpec(s, shape)), tol=tol)
        checked += 1
        base = {
            "check": "join-maximizer",
            "n": n,
            "s": s,
            "c": c,
            "parts": list(shape),
            "lambda1": _round12(lam),
            "best_lambda1": _round12(best),
        }
        if lam > best + eps:
            failures.append(
                {**base, "kind": "maximizer-exceeded",
                 "detail": "a non-star shape beat the maximizer"}
            )
        if (abs(lam - best) <= eps) != (shape == best_shape):
            failures.append(
                {**base, "kind": "equality-shape",
                 "detail": "equality with the maximizer off the unique shape"}
            )
    return VerificationSummary(
        check="join-maximizer",
        scope={"n": n, "s": s, "c": c, "eps": eps},
        counts={"shapes": checked},
        failures=failures,
        elapsed=time.perf_counter() - started,
    )


def verify_quotient_embedding(
    s_max: int = 4,
    t_max: int = 4,
    n_max: int = 24,
    eps: float = 1e-8,
    tol: float = 1e-12,
) -> VerificationSummary:
    """For the join family K_s v (K_{n-ts-s} u tsK1) under its three
    orbit blocks: the partition is equitable, the quotient's largest
    eigenvalue equals the graph's, and (on small orders) every quotient
    eigenvalue already occurs in the full spectrum."""
    started = time.perf_counter()
    failures: list[dict] = []
    checked = 0
    for s in range(1, s_max + 1):
        for t in range(1, t_max + 1):
            for n in range(t * s + s + 1, n_max + 1):
                shape = (n - t * s - s,) + (1,) * (t * s)
                g = build_join_cliques(JoinCliqueSpec(s, shape))
                blocks = [
                    list(range(s)),
                    list(range(s, n - t * s)),
                    list(range(n - t * s, n)),
                ]
                a = adjacency_matrix(g)
                checked += 1
                base = {"check": "quotient-embedding", "n": n, "s": s, "t": t}
                if not is_equitable(a, blocks):
                    failures.append(
                        {**base, "kind": "not-equitable",
                         "detail": "orbit partition failed the equitability test"}
                    )
                    continue
                lam = spectral_radius(g, tol=tol)
                qspec = quotient_spectrum(a, blocks, tol=tol)
                if abs(lam - qspec.radius) > eps:
                    failures.append(
                        {**base, "kind": "quotient-radius",
                         "lambda1": _round12(lam),
                         "quotient_lambda1": _round12(qspec.radius),
                         "detail": "quotient and graph disagree on the largest eigenvalue"}
                    )
                if n <= 12:
                    full = full_spectrum(a, tol=tol).values
                    for q in qspec.values:
                        if min(abs(q - x) for x in full) > eps:
                            failures.append(
                                {**base, "kind": "eigenvalue-embedding",
                                 "quotient_value": _round12(q),
                                 "detail": "quotient eigenvalue missing from the spectrum"}
                            )
    return VerificationSummary(
        check="quotient-embedding",
        scope={"s_max": s_max, "t_max": t_max, "n_max": n_max, "eps": eps},
        counts={"partitions": checked},
        failures=failures,
        elapsed=time.perf_counter() - started,
    )


def _random_connected(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return Graph(1, (0,))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while True:
        p = rng.uniform(0.3, 0.9)
        edges = [e for e in pairs if rng.random() < p]
        g = from_edges(n, edges)
        if is_connected(g):
            return g


def _delete_vertex(g: Graph, v: int) -> Graph:
    keep = [u for u in range(g.n) if u != v]
    relabel = {u: i for i, u in enumerate(keep)}
    edges = [
        (relabel[a], relabel[b]) for (a, b) in g.edges() if a != v and b != v
    ]
    return from_edges(g.n - 1, edges)


def _delete_edge(g: Graph, u: int, v: int) -> Graph:
    edges = [(a, b) for (a, b) in g.edges() if (a, b) != (u, v)]
    return from_edges(g.n, edges)


def verify_subgraph_monotonicity(
    trials: int = 1000,
    max_order: int = 12,
    margin: float = 1e-10,
    seed: int = 20260814,
    tol: float = 1e-12,
) -> VerificationSummary:
    """Deleting an edge or a vertex from a connected graph (keeping it
    connected) strictly lowers the largest adjacency eigenvalue.
    Randomized but fully determined by ``seed``."""
    if trials < 1 or max_order < 2:
        raise DomainError("need at least one trial and max_order >= 2")
    started = time.perf_counter()
    rng = random.Random(seed)
    failures: list[dict] = []
    for _ in range(trials):
        n = rng.randint(2, max_order)
        g = _random_connected(rng, n)
        options: list[tuple] = []
        for (u, v) in g.edges():
            h = _delete_edge(g, u, v)
            if is_connected(h):
                options.append(("edge", u, v))
        for v in range(n):
            if n >= 2 and is_connected(_delete_vertex(g, v)):
                options.append(("vertex", v))
        choice = rng.choice(options)
        if choice[0] == "edge":
            h = _delete_edge(g, choice[1], choice[2])
        else:
            h = _delete_vertex(g, choice[1])
        lam_g = spectral_radius(g, tol=tol)
        lam_h = spectral_radius(h, tol=tol)
        if not lam_g > lam_h + margin:
            failures.append(
                {
                    "check": "subgraph-monotonicity",
                    "kind": "not-strict",
                    "graph6": to_graph6(g),
                    "subgraph6": to_graph6(h),
                    "deletion": list(choice),
                    "lambda1": _round12(lam_g),
                    "sub_lambda1": _round12(lam_h),
                    "detail": "proper connected subgraph did not lose eigenvalue",
                }
            )
    return VerificationSummary(
        check="subgraph-monotonicity",
        scope={"trials": trials, "max_order": max_order, "margin": margin, "seed": seed},
        counts={"trials": trials},
        failures=failures,
        elapsed=time.perf_counter() - started,
    )


def verify_threshold_identities(
    s_max: int = 6,
    t_max: int = 5,
    n_max: int = 40,
    eps: float = 1e-9,
    tol: float = 1e-12,
) -> VerificationSummary:
    """Polynomial facts linking the quotient cubic to the certification
    cubic across the feasible (s, t, n) grid:

    * the quotient cubic's largest root is the eigenvalue of the join
      family it models;
    * certification cubic - quotient cubic = (s - 1) * gap_factor,
      checked at probe points including that root;
    * gap_factor <= gap_bound once n >= ts + s + 1;
    * the root dominates the closed-form complete-split value, strictly
      above the minimal order;
    * for s = 1 the root is the certification threshold itself, and for
      s >= 2 it sits strictly below it with the certification cubic
      negative there.
    """
    started = time.perf_counter()
    failures: list[dict] = []
    checked = 0
    for s in range(1, s_max + 1):
        for t in range(1, t_max + 1):
            for n in range(t * s + s + 1, n_max + 1):
                checked += 1
                base = {"check": "threshold-identities", "n": n, "s": s, "t": t}
                qc = quotient_cubic(s, t, n)
                root, _ = qc.largest_root_in(0.0, float(n - 1))
                shape = (n - t * s - s,) + (1,) * (t * s)
                lam = spectral_radius(
                    build_join_cliques(JoinCliqueSpec(s, shape)), tol=tol
                )
                if abs(root - lam) > eps:
                    failures.append(
                        {**base, "kind": "quotient-root",
                         "root": _round12(root), "lambda1": _round12(lam),
                         "detail": "cubic root missed the join-family eigenvalue"}
                    )
                cert = threshold_cubic(t, n)
                for x in (0.0, 1.0, n / 3.0, n / 2.0, float(n - 1), root):
                    lhs = cert(x) - qc(x)
                    rhs = (s - 1) * gap_factor(s, t, n, x)
                    scale = max(1.0, abs(lhs), abs(rhs))
                    if abs(lhs - rhs) > eps * scale:
                        failures.append(
                            {**base, "kind": "gap-identity", "x": _round12(x),
                             "detail": "cubic difference disagrees with its factored form"}
                        )
                if gap_factor(s, t, n, root) > gap_bound(s, t, root) + eps:
                    failures.append(
                        {**base, "kind": "gap-bound",
                         "detail": "gap factor exceeded its order-free bound"}
                    )
                split = complete_split_radius(s, t)
                if root < split - eps:
                    failures.append(
                        {**base, "kind": "root-ordering",
                         "root": _round12(root), "split": _round12(split),
                         "detail": "root fell below the complete-split value"}
                    )
                if n > t * s + s + 1 and not root > split:
                    failures.append(
                        {**base, "kind": "root-ordering-strict",
                         "root": _round12(root), "split": _round12(split),
                         "detail": "root not strictly above the complete-split value"}
                    )
                eta = threshold(t, n).value
                if s == 1:
                    if abs(root - eta) > eps:
                        failures.append(
                            {**base, "kind": "s1-coincidence",
                             "root": _round12(root), "threshold": _round12(eta),
                             "detail": "s = 1 root differs from the certification threshold"}
                        )
                else:
                    if not cert(root) < 0.0:
                        failures.append(
                            {**base, "kind": "cubic-sign",
                             "value": _round12(cert(root)),
                             "detail": "certification cubic not negative at the root"}
                        )
                    if not root < eta:
                        failures.append(
                            {**base, "kind": "root-below-threshold",
                             "root": _round12(root), "threshold": _round12(eta),
                             "detail": "root failed to sit below the threshold"}
                        )
    return VerificationSummary(
        check="threshold-identities",
        scope={"s_max": s_max, "t_max": t_max, "n_max": n_max, "eps": eps},
        counts={"combinations": checked},
        failures=failures,
        elapsed=time.perf_counter() - started,
    )
