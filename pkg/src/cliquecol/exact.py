"""Exact clique chromatic number and clique transversal number."""
from __future__ import annotations

from .budget import DEFAULT_BUDGET, Budget, Meter
from .cliques import iter_bits, local_bitmasks, maximal_clique_masks
from .graph import Colouring, Graph


def colour_clique_hypergraph(
    adj: list[int], cliques: list[int], k: int, meter: Meter | None = None
) -> list[int] | None:
    """Backtracking search for a ``k``-colouring leaving no clique monochromatic.

    Each vertex keeps a domain of allowed colours. Whenever every coloured
    vertex of a clique shares colour ``c`` and a single vertex of it is still
    uncoloured, ``c`` is removed from that vertex's domain; singleton domains
    are assigned at once. Branching picks the vertex with the fewest choices,
    ties broken towards the most coloured neighbours, so the search grows
    through the graph and cliques close early. Colours never used so far are
    interchangeable, so only one of them is tried.
    """
    n = len(adj)
    edges = [c for c in cliques if c & (c - 1)]
    if k < 1 or (k == 1 and edges):
        return None
    if k == 1 or not edges:
        return [0] * n
    member: list[list[int]] = [[] for _ in range(n)]
    for c in edges:
        for v in iter_bits(c):
            member[v].append(c)
    everyone = (1 << n) - 1
    degree = [a.bit_count() for a in adj]

    def assign(v: int, c: int, dom: list[int], colour: list[int], classes: list[int], done: int):
        queue = [(v, c)]
        while queue:
            v, c = queue.pop()
            if colour[v] >= 0:
                if colour[v] != c:
                    return None
                continue
            if not dom[v] >> c & 1:
                return None
            colour[v] = c
            classes[c] |= 1 << v
            done |= 1 << v
            for q in member[v]:
                if q & done & ~classes[c]:
                    continue  # already has two colours
                rest = q & ~done
                if not rest:
                    return None
                if rest & (rest - 1):
                    continue
                u = rest.bit_length() - 1
                d = dom[u] & ~(1 << c)
                if not d:
                    return None
                dom[u] = d
                if not d & (d - 1):
                    queue.append((u, d.bit_length() - 1))
        return done

    def dfs(dom: list[int], colour: list[int], classes: list[int], done: int) -> list[int] | None:
        if done == everyone:
            return colour
        if meter is not None:
            meter.charge_node()
        used = sum(1 for c in classes if c)
        new = 1 << used if used < k else 0
        best_v, best_key = -1, None
        for v in iter_bits(everyone & ~done):
            choices = dom[v] & ((1 << used) - 1)
            key = (choices.bit_count() + (1 if new else 0), -(adj[v] & done).bit_count(), -degree[v])
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        v = best_v
        options = dom[v] & (((1 << used) - 1) | new)
        for c in iter_bits(options):
            d2, col2, cls2 = dom[:], colour[:], classes[:]
            done2 = assign(v, c, d2, col2, cls2, done)
            if done2 is not None:
                found = dfs(d2, col2, cls2, done2)
                if found is not None:
                    return found
        return None

    return dfs([(1 << k) - 1] * n, [-1] * n, [0] * k, 0)


def _component_chi_c(adj: list[int], meter: Meter, k_max: int | None = None):
    if len(adj) == 1:
        return 1, [0]
    cliques = maximal_clique_masks(adj, meter)
    k = 2
    while k_max is None or k <= k_max:
        found = colour_clique_hypergraph(adj, cliques, k, meter)
        if found is not None:
            return k, found
        k += 1
    return None, None


def clique_chromatic_number_exact(
    g: Graph, budget: Budget = DEFAULT_BUDGET
) -> tuple[int, Colouring]:
    """Minimum number of colours in a clique colouring of ``g``, with a witness.

    Solved per connected component; the answer is the maximum over components
    and 1 for a graph without edges. Raises :class:`BudgetExceeded` when the
    clique count, node count or time limit in ``budget`` is exceeded.
    """
    meter = budget.meter()
    colours = [0] * g.n
    best = 1
    for comp in g.components():
        k, local = _component_chi_c(local_bitmasks(g, comp), meter)
        best = max(best, k)
        for i, v in enumerate(comp):
            colours[v] = local[i]
    return best, Colouring(tuple(colours))


def find_clique_colouring(
    g: Graph, k: int, budget: Budget = DEFAULT_BUDGET, meter: Meter | None = None
) -> Colouring | None:
    """A clique colouring with at most ``k`` colours, or ``None`` if there is none."""
    meter = meter or budget.meter()
    colours = [0] * g.n
    for comp in g.components():
        if len(comp) == 1:
            continue
        adj = local_bitmasks(g, comp)
        local = colour_clique_hypergraph(adj, maximal_clique_masks(adj, meter), k, meter)
        if local is None:
            return None
        for i, v in enumerate(comp):
            colours[v] = local[i]
    return Colouring(tuple(colours))


def chi_c_of_bitmask_graph(adj: list[int], meter: Meter | None = None) -> tuple[int, list[int]]:
    """Clique chromatic number of a small graph given directly as bitmasks."""
    if not any(adj):
        return 1, [0] * len(adj)
    cliques = maximal_clique_masks(adj, meter)
    k = 2
    while True:
        found = colour_clique_hypergraph(adj, cliques, k, meter)
        if found is not None:
            return k, found
        k += 1


def _packing_bound(cliques: list[int]) -> int:
    used = count = 0
    for c in cliques:
        if not c & used:
            used |= c
            count += 1
    return count


def min_hitting_set(cliques: list[int], meter: Meter | None = None) -> int:
    """Size of a smallest vertex set meeting every mask in ``cliques``."""
    cliques = sorted(set(cliques), key=int.bit_count)
    if not cliques:
        return 0
    # greedy cover for the initial upper bound
    best = 0
    rest = cliques
    while rest:
        tally: dict[int, int] = {}
        for c in rest:
            for v in iter_bits(c):
                tally[v] = tally.get(v, 0) + 1
        v = max(tally, key=lambda u: (tally[u], -u))
        rest = [c for c in rest if not c >> v & 1]
        best += 1

    def search(rest: list[int], chosen: int) -> None:
        nonlocal best
        if meter is not None:
            meter.charge_node()
        if not rest:
            best = min(best, chosen)
            return
        if chosen + _packing_bound(rest) >= best:
            return
        banned = 0
        for v in iter_bits(rest[0]):
            # vertices tried in earlier branches are excluded from later ones
            sub = [c for c in rest if not c >> v & 1]
            if any(not c & ~banned for c in sub):
                banned |= 1 << v
                continue
            search(sorted((c & ~banned for c in sub), key=int.bit_count), chosen + 1)
            banned |= 1 << v

    search(cliques, 0)
    return best


def clique_transversal_number(g: Graph, budget: Budget = DEFAULT_BUDGET) -> int:
    """Fewest vertices meeting every maximal clique with at least two vertices."""
    meter = budget.meter()
    total = 0
    for comp in g.components():
        if len(comp) > 1:
            total += min_hitting_set(maximal_clique_masks(local_bitmasks(g, comp), meter), meter)
    return total
