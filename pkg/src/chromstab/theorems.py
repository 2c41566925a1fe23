"""Mechanical checkers for the structural results on chromatic stability.

Every checker computes both sides of the claim it tests independently and
returns a :class:`TheoremReport`. ``overall`` combines the condition verdicts
the way the result states them; ``crosscheck`` says whether the result's
claim actually holds on the instance. A ``False`` crosscheck is a
disagreement worth investigating, never something to reconcile silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Mapping

from .coloring import (
    ChromaticError,
    Partition,
    bondage_witness,
    c_star_witness,
    chromatic_coloring,
    chromatic_number,
    good_colorings,
    is_proper,
    partition_masks,
)
from .families import GRAPH_X_LABELS, graph_x
from .graph import (
    Graph,
    bits,
    complement,
    components,
    delete_edges,
    girth,
    induced,
    is_connected,
    max_clique,
    odd_cycle,
    popcount,
    regular_degree,
)
from .stability import es_chi, es_chi_oracle, single_edge_drops

THEOREMS = (
    "es1-equiv",
    "regular",
    "prop1",
    "disconnected",
    "ng3",
    "extremal",
    "sufficiency-r3",
    "upper-bound",
    "g14",
)

G12_LABELS = ("a", "b", "c", "u", "v", "w", "1", "2", "3", "x", "y", "z")

CLAUSE_IV_READINGS = {
    "forall": (
        "clause (iv): every proper colouring of the complement with exactly chi(complement) "
        "colours is tested, and every 3-vertex class in it"
    ),
    "exists": (
        "clause (iv): some proper colouring of the complement with exactly chi(complement) "
        "colours has a 3-vertex class passing the degree test"
    ),
}


class PreconditionError(ValueError):
    """The instance does not meet a checker's hard precondition."""


@dataclass
class Condition:
    label: str
    holds: bool | None
    witness: Any = None

    def as_dict(self) -> dict:
        return {"label": self.label, "holds": self.holds, "witness": self.witness}


@dataclass
class TheoremReport:
    theorem: str
    applicable: bool = True
    conditions: list[Condition] = field(default_factory=list)
    overall: bool | None = None
    crosscheck: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.crosscheck else "fail"

    def condition(self, label: str) -> Condition:
        for c in self.conditions:
            if c.label == label:
                return c
        raise KeyError(label)

    def add(self, label: str, holds: bool | None, witness: Any = None) -> bool | None:
        self.conditions.append(Condition(label, holds, witness))
        return holds

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "applicable": self.applicable,
            "conditions": [c.as_dict() for c in self.conditions],
            "overall": self.overall,
            "crosscheck": self.crosscheck,
            "notes": list(self.notes),
        }


def _not_applicable(theorem: str, reason: str) -> TheoremReport:
    return TheoremReport(theorem, applicable=False, notes=[reason])


def upper_bound(n: int, r: int) -> int:
    """Largest possible ``es_chi`` of a graph of order ``n`` and chromatic number ``r >= 1``."""
    q = n // r
    return q * (q + 1) if n % r == r - 1 else q * q


def _names(g: Graph, vertices) -> list:
    return [g.label(v) for v in vertices] if g.labels else list(vertices)


def _classes(g: Graph, masks) -> list[list]:
    return [_names(g, bits(m)) for m in masks]


# --- es = 1 equivalences ------------------------------------------------------


def check_es1_equivalence(g: Graph) -> TheoremReport:
    """es = 1, rho = 1 and the existence of a good colouring, computed separately."""
    chi = chromatic_number(g)
    if chi < 2:
        raise PreconditionError(f"needs chi >= 2 (got {chi})")
    rep = TheoremReport("es1-equiv")
    drops = single_edge_drops(g)
    es1 = rep.add(
        "(i) es=1",
        bool(drops),
        {"edge": list(drops[0])} if drops else {"edges_tested": g.m, "single_edge_drops": 0},
    )
    b = bondage_witness(g)
    rho1 = rep.add(
        "(ii) rho=1",
        b.value == 1,
        {"rho": b.value, "coloring": b.coloring.as_lists(), "pair": list(b.pair)},
    )
    good = next(good_colorings(g), None)
    has_good = rep.add(
        "(iii) good coloring",
        good is not None,
        None
        if good is None
        else {"coloring": good.partition.as_lists(), "singleton": good.singleton, "partner": good.partner},
    )
    rep.overall = es1 == rho1 == has_good
    rep.crosscheck = rep.overall
    return rep


# --- regular graphs of degree at most five ------------------------------------


def _is_odd_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.n % 2 == 1 and regular_degree(g) == 2 and is_connected(g)


def check_regular_characterization(g: Graph) -> TheoremReport:
    k = regular_degree(g)
    if g.n == 0 or not is_connected(g) or not 0 <= k <= 5:
        return _not_applicable("regular", "needs a connected k-regular graph with k <= 5")
    rep = TheoremReport("regular")
    cert = es_chi(g)
    lhs = rep.add("es=1", cert.value == 1, {"es": cert.value, "deleted_edges": [list(e) for e in cert.deleted_edges]})
    is_k2 = rep.add("G is K2", g.n == 2 and g.m == 1, {"n": g.n, "m": g.m})
    is_odd = rep.add("G is an odd cycle", _is_odd_cycle(g), {"n": g.n, "degree": k})
    chi = chromatic_number(g)
    if chi > 3:
        cs, wit = c_star_witness(g)
        big = rep.add("chi>3 and c*=1", cs == 1, {"chi": chi, "c_star": cs, "coloring": wit.as_lists()})
    else:
        big = rep.add("chi>3 and c*=1", False, {"chi": chi})
    rep.overall = bool(is_k2 or is_odd or big)
    rep.crosscheck = lhs == rep.overall
    return rep


# --- graph X ----------------------------------------------------------------


def check_prop1_claims() -> TheoremReport:
    x = graph_x()
    at = {name: i for i, name in enumerate(GRAPH_X_LABELS)}
    rep = TheoremReport("prop1")
    deg = regular_degree(x)
    rep.add("6-regular", deg == 6, {"degrees": x.degrees()})
    omega, clique = max_clique(x)
    rep.add("omega=4", omega == 4, {"omega": omega, "clique": _names(x, clique)})
    chi = chromatic_number(x)
    rep.add("chi=4", chi == 4, {"chi": chi, "coloring": _classes(x, chromatic_coloring(x).masks)})
    cs, wit = c_star_witness(x)
    rep.add("c*=1", cs == 1, {"c_star": cs, "coloring": _classes(x, wit.masks)})

    stated = [["w"], ["v1", "u3", "u6"], ["v3", "u2", "u5"], ["v2", "u1", "u4"]]
    p4 = Partition.from_masks(sum(1 << at[v] for v in cls) for cls in stated)
    rep.add("stated 4-coloring is proper", is_proper(x, p4), {"classes": stated})

    cut = [(at["w"], at["v1"]), (at["w"], at["u6"])]
    stated3 = [["w", "v1", "u3", "u6"], ["v3", "u2", "u5"], ["v2", "u1", "u4"]]
    p3 = Partition.from_masks(sum(1 << at[v] for v in cls) for cls in stated3)
    rep.add(
        "deleting wv1, wu6 leaves a proper 3-coloring",
        is_proper(delete_edges(x, cut), p3),
        {"deleted": [["w", "v1"], ["w", "u6"]], "classes": stated3},
    )

    cert = es_chi(x)
    oracle = es_chi_oracle(x)
    rep.add(
        "es=2",
        cert.value == 2 and oracle.value == 2,
        {
            "solver": cert.value,
            "oracle": oracle.value,
            "deleted_edges": [_names(x, e) for e in cert.deleted_edges],
        },
    )
    good = next(good_colorings(x), None)
    rep.add(
        "no good coloring",
        good is None,
        None if good is None else {"coloring": _classes(x, good.partition.masks)},
    )
    rep.overall = all(c.holds for c in rep.conditions)
    rep.crosscheck = rep.overall
    return rep


# --- disconnected graphs ------------------------------------------------------


def check_disconnected_sum2(g: Graph) -> TheoremReport:
    comps = components(g)
    if len(comps) < 2:
        raise PreconditionError("graph is connected")
    rep = TheoremReport("disconnected")
    chi = chromatic_number(g)
    parts = [induced(g, c) for c in comps]
    top = [i for i, h in enumerate(parts) if chromatic_number(h) == chi]
    if len(top) == 1:
        es_top = es_chi(parts[top[0]]).value
        cond_i = rep.add(
            "(i) unique max-chi component with es=1",
            es_top == 1,
            {"component": comps[top[0]], "es": es_top},
        )
    else:
        cond_i = rep.add(
            "(i) unique max-chi component with es=1",
            False,
            {"max_chi_components": [comps[i] for i in top]},
        )

    comp_bar = [complement(h) for h in parts]
    es_bar = [es_chi(h).value for h in comp_bar]
    singles = [i for i, h in enumerate(comp_bar) if c_star_witness(h)[0] == 1]
    hit = next((i for i, e in enumerate(es_bar) if e == 1), None)
    if hit is not None:
        cond_ii = rep.add("(ii) complement side", True, {"component": comps[hit], "es_complement": 1})
    elif len(singles) >= 2:
        cond_ii = rep.add(
            "(ii) complement side",
            True,
            {"singleton_class_components": [comps[i] for i in singles[:2]]},
        )
    else:
        cond_ii = rep.add(
            "(ii) complement side",
            False,
            {"es_complements": es_bar, "singleton_class_components": [comps[i] for i in singles]},
        )
    rep.overall = bool(cond_i and cond_ii)
    direct = es_chi(g).value + es_chi(complement(g)).value
    rep.add("direct: es(G)+es(complement)=2", direct == 2, {"sum": direct})
    rep.crosscheck = rep.overall == (direct == 2)
    return rep


# --- connected 3-chromatic graphs ----------------------------------------------


def _odd_cycles_share_edge(g: Graph) -> tuple[bool, Any]:
    cycles = []
    for u, v in g.edges():
        rows = list(g.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        cyc = odd_cycle(Graph(g.n, tuple(rows)))
        if cyc is None:
            return True, {"edge": [u, v]}
        cycles.append({"edge": [u, v], "odd_cycle_avoiding_edge": cyc})
    return False, cycles


def check_ng3_conditions(g: Graph, clause_iv: str = "forall") -> TheoremReport:
    """Connected 3-chromatic graphs with es(G) + es(complement) = 2.

    ``clause_iv`` picks how the colouring quantifier of clause (iv) is read:
    ``"forall"`` (the literal statement) or ``"exists"``. The literal reading
    is refuted by graph6 ``ECvo``; see the README.
    """
    if clause_iv not in CLAUSE_IV_READINGS:
        raise ValueError(f"clause_iv must be one of {sorted(CLAUSE_IV_READINGS)}")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if chromatic_number(g) != 3:
        raise PreconditionError("needs chi = 3")
    n = g.n
    gbar = complement(g)
    rep = TheoremReport("ng3", notes=[CLAUSE_IV_READINGS[clause_iv]])

    ok, wit = _odd_cycles_share_edge(g)
    c1 = rep.add("(i) all odd cycles share one edge", ok, wit)

    cs_bar, cs_wit = c_star_witness(gbar)
    c2 = rep.add("(ii) c*(complement)=1", cs_bar == 1, {"c_star": cs_bar, "coloring": cs_wit.as_lists()})

    chi_bar = chromatic_number(gbar)
    half_up = (n + 1) // 2
    c3 = rep.add(
        "(iii) chi(complement) >= ceil(n/2)",
        chi_bar >= half_up,
        {"chi_complement": chi_bar, "ceil_half_n": half_up, "coloring": chromatic_coloring(gbar).as_lists()},
    )

    c4 = rep.add("(iv) even-order clause", *_ng3_clause_iv(g, gbar, chi_bar, clause_iv))

    rep.overall = bool(c1 and c2 and c3 and c4)
    es_g = es_chi(g).value
    es_bar = es_chi(gbar).value
    rep.add("direct: es(G)+es(complement)=2", es_g + es_bar == 2, {"es": es_g, "es_complement": es_bar})
    rep.crosscheck = rep.overall == (es_g + es_bar == 2)
    return rep


def _ng3_clause_iv(g: Graph, gbar: Graph, chi_bar: int, reading: str) -> tuple[bool, Any]:
    n = g.n
    if n % 2:
        return True, {"guard": False, "reason": "n odd"}
    if chi_bar != n // 2:
        return True, {"guard": False, "reason": "chi(complement) != n/2", "chi_complement": chi_bar}
    for good in good_colorings(g):
        sizes = good.partition.sizes
        partner = sizes[good.partner]
        third = sizes[3 - good.singleton - good.partner]
        if abs(partner - third) != 1:
            return True, {
                "guard": False,
                "reason": "good coloring with ||C2|-|C3|| != 1",
                "coloring": good.partition.as_lists(),
                "class_sizes": [partner, third],
            }
    gi = girth(g)
    if gi != 3:
        return False, {"guard": True, "girth": None if gi == float("inf") else gi}
    degs = g.degrees()
    checked = 0
    first_bad = None
    for masks in partition_masks(gbar.adj, chi_bar):
        checked += 1
        for cm in masks:
            if popcount(cm) != 3:
                continue
            nb = 0
            for x in bits(cm):
                nb |= g.adj[x]
            nb &= ~cm
            low = next((v for v in bits(nb) if degs[v] < 2), None)
            found = {
                "guard": True,
                "complement_coloring": Partition.from_masks(masks).as_lists(),
                "class": list(bits(cm)),
            }
            if low is None and reading == "exists":
                return True, found
            if low is not None and reading == "forall":
                return False, {**found, "vertex": low, "degree": degs[low]}
            if low is not None and first_bad is None:
                first_bad = {**found, "vertex": low, "degree": degs[low]}
    if reading == "forall":
        return True, {"guard": True, "girth": 3, "complement_colorings_checked": checked}
    return False, {"guard": True, "no_passing_class": True, "example_failure": first_bad}


# --- extremal graphs ------------------------------------------------------------


def _by_size(masks) -> list[int]:
    return sorted(masks, key=popcount)


def _extremal_i(g: Graph, cls: list[int], q: int) -> dict[str, Any]:
    """Violations of conditions (1)-(3) for ``n = r - 1 (mod r)`` on one colouring."""
    out: dict[str, Any] = {}
    sizes = [popcount(m) for m in cls]
    if sizes != [q] + [q + 1] * (len(cls) - 1):
        out["(1)"] = {"class_sizes": sizes}
    first = cls[0]
    for i, ci in enumerate(cls[1:], start=1):
        for a in bits(first):
            missing = ci & ~g.adj[a]
            if missing:
                out.setdefault("(2)", {"class": i, "non_edge": [a, (missing & -missing).bit_length() - 1]})
                break
        if "(2)" in out:
            break
    low = _low_cross_degree(g, cls, range(len(cls)), q)
    if low:
        out["(3)"] = low
    return out


def _low_cross_degree(g: Graph, cls: list[int], which, q: int) -> dict | None:
    for i in which:
        for v in bits(cls[i]):
            for j, cj in enumerate(cls):
                if j != i:
                    e = popcount(g.adj[v] & cj)
                    if e < q:
                        return {"vertex": v, "class": j, "edges": e, "needed": q}
    return None


def _extremal_ii(g: Graph, cls: list[int], q: int) -> dict[str, Any]:
    out: dict[str, Any] = {}
    sizes = [popcount(m) for m in cls]
    if sizes[0] != q or sizes[1] != q:
        out["(1)"] = {"class_sizes": sizes}
    low = _low_cross_degree(g, cls, [i for i, s in enumerate(sizes) if s == q], q)
    if low:
        out["(2)"] = low
    else:
        for i, ci in enumerate(cls):
            if sizes[i] <= q:
                continue
            total = sum(
                min(popcount(g.adj[v] & cj) for j, cj in enumerate(cls) if j != i) for v in bits(ci)
            )
            if total < q * q:
                out["(2)"] = {"class": i, "sum_min_cross_edges": total, "needed": q * q}
                break
    return out


def _scan_colorings(g: Graph, r: int, branch, labels: list[str], stop_early: bool = False):
    q = g.n // r
    first: dict[str, Any] = {}
    count = 0
    for masks in partition_masks(g.adj, r):
        count += 1
        cls = _by_size(masks)
        for label, wit in branch(g, cls, q).items():
            if label not in first:
                first[label] = {"coloring": _classes(g, cls), **wit}
        if stop_early and first:
            break
    return count, {label: first.get(label) for label in labels}


def check_extremal_necessary(g: Graph) -> TheoremReport:
    r = chromatic_number(g)
    if r < 2:
        return _not_applicable("extremal", "needs chi >= 2")
    bound = upper_bound(g.n, r)
    cert = es_chi(g)
    if cert.value != bound:
        return _not_applicable("extremal", f"es={cert.value} does not attain the bound {bound}")
    rep = TheoremReport("extremal")
    if g.n % r == r - 1:
        branch, labels, tag = _extremal_i, ["(1)", "(2)", "(3)"], "(i)"
    else:
        branch, labels, tag = _extremal_ii, ["(1)", "(2)"], "(ii)"
    count, fails = _scan_colorings(g, r, branch, labels)
    for label in labels:
        bad = fails[label]
        rep.add(f"{tag}{label}", bad is None, bad if bad is not None else {"colorings_checked": count})
    rep.overall = all(c.holds for c in rep.conditions)
    rep.crosscheck = rep.overall
    return rep


def check_sufficiency_r3(g: Graph) -> TheoremReport:
    chi = chromatic_number(g)
    if chi != 3:
        raise PreconditionError(f"needs chi = 3 (got {chi})")
    if g.n % 3 != 2:
        raise PreconditionError(f"needs n = 2 (mod 3) (got n = {g.n})")
    rep = TheoremReport("sufficiency-r3")
    count, fails = _scan_colorings(g, 3, _extremal_i, ["(1)", "(2)", "(3)"], stop_early=True)
    failed = {k: v for k, v in fails.items() if v is not None}
    hyp = rep.add(
        "every 3-coloring satisfies (1)-(3)",
        not failed,
        {"counterexample": failed} if failed else {"colorings_checked": count},
    )
    bound = upper_bound(g.n, 3)
    es = es_chi(g).value
    concl = rep.add("es equals the bound", es == bound, {"es": es, "bound": bound})
    rep.overall = hyp
    rep.crosscheck = (not hyp) or bool(concl)
    return rep


# --- the 14-vertex example ---------------------------------------------------------


def build_g14(g12: Graph, labeling: Mapping[str, int]) -> Graph:
    """Relabel ``g12`` by ``labeling`` and add ``u0``, ``v0`` joined to every vertex."""
    if g12.n != 12:
        raise PreconditionError(f"G12 must have 12 vertices (got {g12.n})")
    if set(labeling) != set(G12_LABELS) or sorted(labeling.values()) != list(range(12)):
        raise PreconditionError(f"labeling must map {', '.join(G12_LABELS)} bijectively onto 0..11")
    names = [""] * 12
    for name, v in labeling.items():
        names[v] = name
    edges = g12.edges() + [(v, s) for s in (12, 13) for v in range(12)]
    return Graph.from_edges(14, edges, [*names, "u0", "v0"])


def _independent_sets(g: Graph, min_size: int) -> list[int]:
    out: list[int] = []

    def rec(cur: int, size: int, cand: int) -> None:
        if size >= min_size:
            out.append(cur)
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            rec(cur | 1 << v, size + 1, cand & ~g.adj[v])

    rec(0, 0, g.vertex_mask)
    return out


def verify_g14_claims(
    g12: Graph, labeling: Mapping[str, int] | None = None, exact: bool = False
) -> TheoremReport:
    """Check the claims about G14 on a candidate G12.

    ``labeling`` maps each of ``a b c u v w 1 2 3 x y z`` to a vertex of
    ``g12``; by default vertex ``i`` gets ``G12_LABELS[i]``. With ``exact`` the
    stability index of G14 is also computed exactly (slow).
    """
    if labeling is None:
        labeling = {name: i for i, name in enumerate(G12_LABELS)}
    g = build_g14(g12, labeling)
    at = {name: i for i, name in enumerate(g.labels)}

    def m(names) -> int:
        return sum(1 << at[s] for s in names)

    rep = TheoremReport("g14")
    a, b, c, d = ["a", "b", "c"], ["u", "v", "w"], ["1", "2", "3"], ["x", "y", "z"]
    special = ["b", "u", "1", "z"]
    expected = {m(s) for s in (a, b, c, d, special)} | {m(t) for t in combinations(special, 3)}
    found = set(_independent_sets(g, 3))
    rep.add(
        "(a) independent sets of size >= 3",
        found == expected,
        {
            "missing": sorted(sorted(_names(g, bits(s))) for s in expected - found),
            "unexpected": sorted(sorted(_names(g, bits(s))) for s in found - expected),
        },
    )

    chi = chromatic_number(g)
    target = Partition.from_masks([m(["u0", "v0"]), m(a), m(b), m(c), m(d)])
    five = [Partition.from_masks(ms) for ms in _take(partition_masks(g.adj, 5), 3)] if chi == 5 else []
    rep.add(
        "(b) chi=5 with the unique stated 5-coloring",
        chi == 5 and five == [target],
        {"chi": chi, "five_colorings": [_classes(g, p.masks) for p in five]},
    )

    if chi == 5:
        count, fails = _scan_colorings(g, 5, _extremal_i, ["(1)", "(2)", "(3)"])
        bad = {k: v for k, v in fails.items() if v is not None}
        rep.add("(c) conditions (1)-(3) on every 5-coloring", not bad, bad or {"colorings_checked": count})
    else:
        rep.add("(c) conditions (1)-(3) on every 5-coloring", False, {"chi": chi})

    cut = [("c", "v"), ("a", "w"), ("3", "y"), ("2", "x")]
    missing = [list(e) for e in cut if not g.has_edge(at[e[0]], at[e[1]])]
    four = [["u0", "v0"], ["a", "c", "v", "w"], ["b", "u", "1", "z"], ["2", "3", "x", "y"]]
    if missing:
        rep.add("(d) deleting cv, aw, 3y, 2x gives the stated 4-coloring", False, {"non_edges": missing})
        deleted_ok = False
    else:
        rest = delete_edges(g, [(at[x], at[y]) for x, y in cut])
        p4 = Partition.from_masks(m(cls) for cls in four)
        deleted_ok = rep.add(
            "(d) deleting cv, aw, 3y, 2x gives the stated 4-coloring",
            is_proper(rest, p4) and chi == 5,
            {"classes": four, "chi": chi},
        )
    bound = upper_bound(14, 5)
    if exact:
        cert = es_chi(g)
        rep.add(
            "(e) es <= 4 < bound",
            cert.value <= 4 < bound,
            {"es": cert.value, "bound": bound, "deleted_edges": [_names(g, e) for e in cert.deleted_edges]},
        )
    else:
        rep.add("(e) es <= 4 < bound", bool(deleted_ok), {"es_upper": 4 if deleted_ok else None, "bound": bound})
    rep.overall = all(x.holds for x in rep.conditions)
    rep.crosscheck = rep.overall
    return rep


def _take(it, k: int) -> list:
    out = []
    for item in it:
        out.append(list(item))
        if len(out) >= k:
            break
    return out


# --- upper bound -------------------------------------------------------------------


def check_upper_bound(g: Graph) -> TheoremReport:
    r = chromatic_number(g)
    if r < 2:
        return _not_applicable("upper-bound", "needs chi >= 2")
    rep = TheoremReport("upper-bound")
    bound = upper_bound(g.n, r)
    cert = es_chi(g)
    ok = rep.add(
        "es <= bound",
        cert.value <= bound,
        {"es": cert.value, "bound": bound, "tight": cert.value == bound, "chi": r, "n": g.n},
    )
    rep.overall = ok
    rep.crosscheck = ok
    return rep


def run_check(theorem: str, g: Graph | None, **kwargs) -> TheoremReport:
    """Dispatch by theorem id; precondition failures become not-applicable reports."""
    if theorem == "prop1":
        return check_prop1_claims()
    checkers = {
        "es1-equiv": check_es1_equivalence,
        "regular": check_regular_characterization,
        "disconnected": check_disconnected_sum2,
        "ng3": check_ng3_conditions,
        "extremal": check_extremal_necessary,
        "sufficiency-r3": check_sufficiency_r3,
        "upper-bound": check_upper_bound,
        "g14": verify_g14_claims,
    }
    if theorem not in checkers:
        raise KeyError(f"unknown theorem {theorem!r}; known: {', '.join(THEOREMS)}")
    assert g is not None
    try:
        return checkers[theorem](g, **kwargs)
    except (PreconditionError, ChromaticError) as exc:
        return _not_applicable(theorem, str(exc))
