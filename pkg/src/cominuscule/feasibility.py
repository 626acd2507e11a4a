"""Does the grading identity force the radical coefficients to vanish?

For a convex order beta_1 < ... < beta_N and positions i > j the question is
whether

    beta_i - beta_j = sum_{k>i} b_k beta_k - sum_{k<j} a_k beta_k,   a, b >= 0,

admits a solution with a nonzero coefficient on some radical root.  Two
deciders live here: ``decide_lemma`` replays the elimination argument on a
box-embedded split order and emits a checkable trace, and ``oracle`` runs an
exact bounded search that works for any convex order.
"""

from __future__ import annotations

import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

from .convex import LeviSplit, check_levi_split, enumerate_split_orders, is_convex, reverse_order
from .posets import (
    BoxEmbedding,
    ParabolicData,
    box_embedding,
    canonical_order,
    partial_leq,
    radical_poset,
)
from .roots import Root, height


class PreconditionError(ValueError):
    """The instance does not meet the requirements of the decider."""


class Outcome(str, enum.Enum):
    POSITIVE = "positive"
    VIOLATION = "violation"
    UNKNOWN = "unknown"


def _add(x: Sequence[int], y: Sequence[int], c: int = 1) -> Root:
    return tuple(a + c * b for a, b in zip(x, y))


def _sub(x: Sequence[int], y: Sequence[int]) -> Root:
    return tuple(a - b for a, b in zip(x, y))


# ---------------------------------------------------------------------------
# instances and verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairInstance:
    """A pair of radical roots at 1-based positions i_pos >= j_pos of a convex order."""

    parabolic: ParabolicData
    order: tuple[Root, ...]
    i_pos: int
    j_pos: int
    embedding: BoxEmbedding | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.order)
        if not (1 <= self.j_pos <= self.i_pos <= n):
            raise PreconditionError(f"need 1 <= j_pos <= i_pos <= {n}, got ({self.i_pos}, {self.j_pos})")
        for pos in (self.i_pos, self.j_pos):
            if not self.parabolic.is_radical(self.order[pos - 1]):
                raise PreconditionError(f"position {pos} holds the non-radical root {self.order[pos - 1]}")

    @classmethod
    def create(cls, p: ParabolicData, order: Sequence[Sequence[int]], i_pos: int, j_pos: int,
               embedding: BoxEmbedding | None = None, check: bool = True) -> "PairInstance":
        """Build an instance, swapping the positions so that i_pos >= j_pos.

        The swap is harmless: the anti-automorphism exchanging E and F maps
        [E_a, F_b] to [E_b, F_a] and preserves the Levi subalgebra.
        """
        order = tuple(tuple(int(c) for c in b) for b in order)
        if check and not is_convex(p.root_system, order):
            raise PreconditionError("order is not convex")
        i_pos, j_pos = max(i_pos, j_pos), min(i_pos, j_pos)
        return cls(p, order, i_pos, j_pos, embedding)

    @property
    def xi_i(self) -> Root:
        return self.order[self.i_pos - 1]

    @property
    def xi_j(self) -> Root:
        return self.order[self.j_pos - 1]

    def normalized(self) -> "PairInstance":
        return self  # positions are ordered on construction

    @property
    def split(self) -> LeviSplit:
        return check_levi_split(self.order, self.parabolic)


@dataclass(frozen=True)
class Term:
    position: int
    root: Root
    coeff: int
    side: str  # "before" (subtracted, positions < j) or "after" (added, positions > i)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    trace: dict[str, Any] = field(default_factory=dict)
    witness: tuple[Term, ...] | None = None
    cap: int | None = None
    xi_i: Root | None = None
    xi_j: Root | None = None
    t: int | None = None

    def __post_init__(self):
        if self.outcome is Outcome.VIOLATION:
            if self.witness is None or self.xi_i is None or self.xi_j is None:
                raise ValueError("a violation needs a witness and the pair it refutes")
            problems = witness_problems(self.xi_i, self.xi_j, self.witness, self.t)
            if problems:
                raise ValueError("invalid witness: " + "; ".join(problems))

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"outcome": self.outcome.value}
        if self.xi_i is not None:
            out["xi_i"] = list(self.xi_i)
            out["xi_j"] = list(self.xi_j)
        if self.cap is not None:
            out["cap"] = self.cap
        if self.witness is not None:
            out["witness"] = [
                {"position": w.position, "root": list(w.root), "coeff": w.coeff, "side": w.side}
                for w in self.witness
            ]
        out["trace"] = _jsonable(self.trace)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in seq]
    if isinstance(x, enum.Enum):
        return x.value
    return x


def witness_problems(xi_i: Root, xi_j: Root, witness: Iterable[Term], t: int | None = None) -> list[str]:
    """Re-substitute a witness; empty means it is an exact lattice identity."""
    bad = []
    lhs = _sub(xi_i, xi_j)
    rhs = tuple(0 for _ in xi_i)
    rad_before = rad_after = 0
    for w in witness:
        if w.coeff < 0:
            bad.append(f"negative coefficient at position {w.position}")
        sign = 1 if w.side == "after" else -1
        rhs = _add(rhs, w.root, sign * w.coeff)
        if t is not None and w.root[t - 1] == 1:
            if w.side == "after":
                rad_after += w.coeff
            else:
                rad_before += w.coeff
    if lhs != rhs:
        bad.append(f"identity fails: {lhs} != {rhs}")
    if t is not None:
        if rad_after + rad_before == 0:
            bad.append("no radical coefficient is nonzero")
        if rad_after != rad_before:
            bad.append(f"radical counts differ: {rad_after} after vs {rad_before} before")
    return bad


# ---------------------------------------------------------------------------
# elimination and the lemma replay
# ---------------------------------------------------------------------------

def eliminate(inst: PairInstance) -> tuple[list[Root], list[Root]]:
    """Radical survivors after dropping everything comparable to the pair.

    Returns (B, S): radical roots after xi_i not above it, and radical roots
    before xi_j not below it.  Only valid for radical-first orders, where the
    Levi part of the identity is a nonnegative combination.
    """
    if inst.split is not LeviSplit.RADICAL_FIRST:
        raise PreconditionError("elimination needs a radical-first order; use the oracle instead")
    p = inst.parabolic
    after = [x for x in inst.order[inst.i_pos:] if p.is_radical(x)]
    before = [x for x in inst.order[: inst.j_pos - 1] if p.is_radical(x)]
    B = [x for x in after if not partial_leq(inst.xi_i, x)]
    S = [x for x in before if not partial_leq(x, inst.xi_j)]
    return B, S


def _embedding_for(inst: PairInstance) -> BoxEmbedding:
    if inst.embedding is not None:
        return inst.embedding
    return box_embedding(radical_poset(inst.parabolic))


def decide_lemma(inst: PairInstance) -> Verdict:
    """Prove vanishing by the elimination argument, or return Unknown.

    Never returns a violation.  The trace records every object the argument
    uses so that :func:`check_lemma_trace` can re-validate it.
    """
    base = dict(xi_i=inst.xi_i, xi_j=inst.xi_j, t=inst.parabolic.t)
    if inst.i_pos == inst.j_pos:
        return Verdict(Outcome.POSITIVE, {"case": "cartan"}, **base)
    B, S = eliminate(inst)
    trace: dict[str, Any] = {"B": B, "S": S}
    if not B or not S:
        # the alpha_t count forces the two radical sums to agree
        trace["case"] = "empty_B" if not B else "empty_S"
        return Verdict(Outcome.POSITIVE, trace, **base)

    emb = _embedding_for(inst)
    a, _ = emb.coords[inst.xi_i]
    c, _ = emb.coords[inst.xi_j]
    xi_S = emb.at(a + 1, emb.F[a]) if a < emb.A else None
    xi_B = emb.at(c - 1, emb.L[c - 2]) if c > 1 else None
    trace.update(row_i=a, row_j=c, xi_S=xi_S, xi_B=xi_B,
                 chi_B=emb.at(a, emb.L[a - 1]), chi_S=emb.at(c, emb.F[c - 1]))
    if xi_S is None or xi_B is None:
        trace["case"] = "no_auxiliary_root"
        return Verdict(Outcome.UNKNOWN, trace, **base)
    if not all(partial_leq(xi_S, x) for x in B) or not all(partial_leq(x, xi_B) for x in S):
        trace["case"] = "auxiliary_roots_not_bounds"
        return Verdict(Outcome.UNKNOWN, trace, **base)

    diff = _sub(inst.xi_i, inst.xi_j)
    gap = _sub(xi_S, xi_B)
    # the bound C * gap_m <= diff_m needs gap_m >= 0 for C >= 1
    ms = [m + 1 for m in range(len(diff)) if diff[m] < gap[m] and gap[m] >= 0]
    trace.update(diff=diff, gap=gap)
    if not ms:
        trace["case"] = "no_index"
        return Verdict(Outcome.UNKNOWN, trace, **base)
    preferred = emb.a(a) if a < emb.A else None
    trace["m"] = preferred if preferred in ms else ms[0]
    trace["case"] = "lemma"
    return Verdict(Outcome.POSITIVE, trace, **base)


def check_lemma_trace(inst: PairInstance, v: Verdict) -> list[str]:
    """Independently re-validate a Positive verdict from :func:`decide_lemma`."""
    bad: list[str] = []
    if v.outcome is not Outcome.POSITIVE:
        return ["verdict is not positive"]
    tr = v.trace
    case = tr.get("case")
    if case == "cartan":
        return [] if inst.i_pos == inst.j_pos else ["cartan case on distinct positions"]
    B, S = eliminate(inst)
    if [tuple(x) for x in tr["B"]] != B or [tuple(x) for x in tr["S"]] != S:
        bad.append("survivor sets do not match a fresh elimination")
    if case in ("empty_B", "empty_S"):
        empty = B if case == "empty_B" else S
        if empty:
            bad.append(f"{case} claimed but the set is nonempty")
        return bad
    if case != "lemma":
        return bad + [f"unexpected case {case!r}"]
    xs, xb = tuple(tr["xi_S"]), tuple(tr["xi_B"])
    p = inst.parabolic
    if not (p.is_radical(xs) and p.is_radical(xb)):
        bad.append("auxiliary roots are not radical")
    if not all(partial_leq(xs, x) for x in B):
        bad.append("xi_S is not below every element of B")
    if not all(partial_leq(x, xb) for x in S):
        bad.append("xi_B is not above every element of S")
    m = tr["m"]
    diff, gap = _sub(inst.xi_i, inst.xi_j), _sub(xs, xb)
    if not (diff[m - 1] < gap[m - 1] and gap[m - 1] >= 0):
        bad.append(f"index {m} does not separate: diff {diff[m - 1]}, gap {gap[m - 1]}")
    return bad


# ---------------------------------------------------------------------------
# bounded oracle
# ---------------------------------------------------------------------------

def _budget_functionals(inst: PairInstance) -> list[tuple[int, list[int], int]]:
    """Exact linear constraints from the separating Weyl elements.

    For m in [j-1, i] the map x -> ht(w_m^{-1} x), w_m = s_{i_1}...s_{i_m},
    is negative on positions <= m and positive after.  Applying it to the
    identity gives sum |phi(beta_k)| c_k = phi(beta_i - beta_j) over the free
    positions, with every weight positive.
    """
    from .convex import order_to_word

    rs = inst.parabolic.root_system
    word = order_to_word(rs, inst.order)
    free = list(range(1, inst.j_pos)) + list(range(inst.i_pos + 1, len(inst.order) + 1))
    diff = _sub(inst.xi_i, inst.xi_j)
    out = []
    for m in range(inst.j_pos - 1, inst.i_pos + 1):
        inv = tuple(reversed(word[:m]))
        phi = lambda v: height(rs.apply_word(inv, v))
        weights = []
        for k in free:
            w = phi(inst.order[k - 1])
            weights.append(-w if k < inst.j_pos else w)
        assert all(w > 0 for w in weights)
        out.append((m, weights, phi(diff)))
    return out


def oracle(inst: PairInstance, coeff_cap: int = 4, box: int | None = None,
           node_limit: int | None = 2_000_000) -> Verdict:
    """Exhaustive search for a solution with a nonzero radical coefficient.

    Every solution satisfies the exact weighted-sum constraints of
    ``_budget_functionals``, so the search space is finite.  Coefficients are
    capped at ``coeff_cap``; when the constraints already force every
    coefficient below the cap (and ``box`` never prunes) the region is closed
    and an empty search proves Positive.  ``box`` optionally bounds every
    coordinate of the running residual.
    """
    if coeff_cap <= 0:
        raise ValueError("coeff_cap must be positive")
    base = dict(xi_i=inst.xi_i, xi_j=inst.xi_j, t=inst.parabolic.t, cap=coeff_cap)
    if inst.i_pos == inst.j_pos:
        return Verdict(Outcome.POSITIVE, {"case": "cartan", "closed": True}, **base)
    p = inst.parabolic
    n = len(inst.order)
    free = list(range(1, inst.j_pos)) + list(range(inst.i_pos + 1, n + 1))
    cons = _budget_functionals(inst)
    targets = [c[2] for c in cons]
    if any(tg < 0 for tg in targets):
        return Verdict(Outcome.POSITIVE, {"case": "infeasible", "closed": True}, **base)
    # per-variable upper bound from the tightest functional
    ub = [min(tg // w[k] for _, w, tg in cons) for k in range(len(free))]
    closed = all(u <= coeff_cap for u in ub)
    best_m = min(cons, key=lambda c: c[2])[0]
    ub = [min(u, coeff_cap) for u in ub]

    # most constrained variables first
    idx = sorted(range(len(free)), key=lambda k: (ub[k], free[k]))
    roots = [inst.order[free[k] - 1] for k in idx]
    signs = [(-1 if free[k] < inst.j_pos else 1) for k in idx]
    weights = [[w[k] for k in idx] for _, w, _ in cons]
    rad = [p.is_radical(r) for r in roots]
    ubs = [ub[k] for k in idx]
    # residual: (beta_i - beta_j) - sum after + sum before must reach 0
    start = _sub(inst.xi_i, inst.xi_j)
    nodes = 0
    box_pruned = False
    limit_hit = False
    coeffs = [0] * len(idx)

    def dfs(k: int, resid: Root, budgets: list[int]) -> bool:
        nonlocal nodes, box_pruned, limit_hit
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            limit_hit = True
            return False
        if k == len(idx):
            if any(resid) or any(budgets):
                return False
            return any(c and r for c, r in zip(coeffs, rad))
        top = min(ubs[k], min(b // w[k] for b, w in zip(budgets, weights)))
        for c in range(top, -1, -1):
            nb = [b - c * w[k] for b, w in zip(budgets, weights)]
            nr = _add(resid, roots[k], -signs[k] * c)
            if box is not None and any(abs(x) > box for x in nr):
                box_pruned = True
                continue
            coeffs[k] = c
            if dfs(k + 1, nr, nb):
                return True
            if limit_hit:
                break
        coeffs[k] = 0
        return False

    found = dfs(0, start, list(targets))
    trace = {"closed": closed and not box_pruned and not limit_hit, "nodes": nodes,
             "functional_position": best_m, "budget": min(targets)}
    if found:
        witness = tuple(
            Term(free[k], roots[n_], coeffs[n_], "before" if signs[n_] < 0 else "after")
            for n_, k in enumerate(idx) if coeffs[n_]
        )
        witness = tuple(sorted(witness, key=lambda w: w.position))
        trace["case"] = "witness"
        return Verdict(Outcome.VIOLATION, trace, witness, **base)
    if trace["closed"]:
        trace["case"] = "exhausted"
        return Verdict(Outcome.POSITIVE, trace, **base)
    trace["case"] = "open"
    return Verdict(Outcome.UNKNOWN, trace, **base)


# ---------------------------------------------------------------------------
# scans
# ---------------------------------------------------------------------------

def radical_positions(p: ParabolicData, order: Sequence[Root]) -> list[int]:
    return [k + 1 for k, b in enumerate(order) if p.is_radical(b)]


def radical_pairs(p: ParabolicData, order: Sequence[Root], strict: bool = True) -> Iterator[tuple[int, int]]:
    pos = radical_positions(p, order)
    for a, i in enumerate(pos):
        for j in pos[: a + (0 if strict else 1)]:
            yield i, j


def canonical_instances(p: ParabolicData, strict: bool = True) -> list[PairInstance]:
    emb = box_embedding(radical_poset(p))
    order = canonical_order(emb)
    return [PairInstance.create(p, order, i, j, emb, check=False) for i, j in radical_pairs(p, order, strict)]


def _oracle_job(args):
    inst, cap, box = args
    return oracle(inst, cap, box)


def run_oracle_all(instances: Sequence[PairInstance], coeff_cap: int = 4, box: int | None = None,
                   workers: int = 1) -> list[Verdict]:
    """Oracle over many instances; results come back in input order."""
    jobs = [(inst, coeff_cap, box) for inst in instances]
    if workers <= 1:
        return [_oracle_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_oracle_job, jobs, chunksize=8))


@dataclass
class ScanReport:
    label: str
    orders_scanned: int = 0
    pairs_checked: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    unknown: int = 0
    truncated: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "parabolic": self.label,
            "orders_scanned": self.orders_scanned,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
            "unknown": self.unknown,
            "truncated": self.truncated,
        }


def conjecture_scan(p: ParabolicData, budget: int | None = None, coeff_cap: int = 4,
                    workers: int = 1, all_levi: bool = True) -> ScanReport:
    """Oracle on every radical pair of every split convex order.

    Both split sides are covered: each radical-first order is scanned along
    with its reversal, which puts the Levi roots first.  With ``all_levi``
    every convex order of the Levi roots is combined with every linear
    extension of the radical poset.
    """
    rep = ScanReport(p.label)
    stream = enumerate_split_orders(p, budget=budget, all_levi=all_levi)
    for order in stream:
        for o in (order, reverse_order(order)):
            rep.orders_scanned += 1
            insts = [PairInstance.create(p, o, i, j, check=False) for i, j in radical_pairs(p, o)]
            for inst, v in zip(insts, run_oracle_all(insts, coeff_cap, workers=workers)):
                rep.pairs_checked += 1
                if v.outcome is Outcome.VIOLATION:
                    rep.violations.append({"order": [list(b) for b in o], **v.to_dict()})
                elif v.outcome is Outcome.UNKNOWN:
                    rep.unknown += 1
    rep.truncated = stream.truncated
    return rep
