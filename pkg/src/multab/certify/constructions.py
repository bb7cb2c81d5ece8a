"""Size-producing constructions, each emitting witnessed certificate entries.

Every construction returns entries in the coordinates of the graph it was
handed; the pipeline translates contracted coordinates back to the original
graph. Branch tags name what the construction does:

  trivial              max-degree star or greedy induced matching
  half-regular-split   remove one Y-vertex from a half-regular simple graph
  degree-multiples     prefixes of the X side of a half-regular multigraph
  two-class            two multiplicity classes at one Y-vertex
  sparse-chain         the low-multiplicity nested-subset chain
  type-zero-chain      chain inside a union of type-0 neighborhoods, lifted
  product-grid         products of common degrees after vertex deletions
  gcd-shift            sumset after a gcd-minimizing shift of the core block
"""

from __future__ import annotations

from collections import Counter
from math import gcd

from ..bigraph import (
    BipartiteMultigraph,
    classify_type,
    degree_profile,
    induced_edge_count,
    induced_subgraph,
)
from ..errors import InputError, InternalCheckError
from ..numtheory import min_gcd_shift_pair
from ..profiles import ScaleProfile
from ..sumset import Seq, SizeSet, repeated, subset_sums, sumset_add
from .certificate import CertEntry

TRIVIAL = "trivial"
WARM_UP = "half-regular-split"
MULTIPLES = "degree-multiples"
TWO_CLASS = "two-class"
SPARSE_CHAIN = "sparse-chain"
TYPE_ZERO = "type-zero-chain"
PRODUCT_GRID = "product-grid"
GCD_SHIFT = "gcd-shift"

BRANCH_RANK = {
    TRIVIAL: 0,
    WARM_UP: 1,
    MULTIPLES: 2,
    TWO_CLASS: 3,
    TYPE_ZERO: 4,
    PRODUCT_GRID: 5,
    GCD_SHIFT: 6,
}


def _verified(g: BipartiteMultigraph, entries: list[CertEntry]) -> list[CertEntry]:
    for entry in entries:
        count = induced_edge_count(g, entry.xs, entry.ys)
        if count != entry.size:
            raise InternalCheckError(
                f"{entry.source} emitted size {entry.size} but witnesses {count}"
            )
    return entries


def vertex_types(h: BipartiteMultigraph, profile: ScaleProfile) -> list[int | None]:
    """Type of every Y-vertex (None where no multiplicity class dominates)."""
    threshold = profile.type_threshold(h.nx, h.m)
    return [classify_type(h, y, threshold) for y in range(h.ny)]


# -- trivial: star or induced matching ------------------------------------


def _star_entries(g: BipartiteMultigraph) -> list[CertEntry]:
    best_deg, best = -1, None
    for x in range(g.nx):
        if g.deg_x(x) > best_deg:
            best_deg, best = g.deg_x(x), ("x", x)
    for y in range(g.ny):
        if g.deg_y(y) > best_deg:
            best_deg, best = g.deg_y(y), ("y", y)
    entries = [CertEntry(0, (), (), TRIVIAL)]
    if best is None or best_deg == 0:
        return entries
    side, v = best
    row = g.x_row(v) if side == "x" else g.y_row(v)
    total = 0
    picked: list[int] = []
    for u, w in row:
        picked.append(u)
        total += w
        if side == "x":
            entries.append(CertEntry(total, (v,), tuple(picked), TRIVIAL))
        else:
            entries.append(CertEntry(total, tuple(picked), (v,), TRIVIAL))
    return entries


def _matching_entries(g: BipartiteMultigraph) -> list[CertEntry]:
    sel_x: list[int] = []
    sel_y: list[int] = []
    prefix = 0
    entries = [CertEntry(0, (), (), TRIVIAL)]
    x_used: set[int] = set()
    y_used: set[int] = set()
    for x in range(g.nx):
        if x in x_used:
            continue
        for y, w in g.x_row(x):
            if y in y_used:
                continue
            if any(g.mult(x, yy) for yy in sel_y):
                break  # x sees an already-selected Y-vertex: never induced
            if any(g.mult(xx, y) for xx in sel_x):
                continue
            sel_x.append(x)
            sel_y.append(y)
            x_used.add(x)
            y_used.add(y)
            prefix += w
            entries.append(CertEntry(prefix, tuple(sel_x), tuple(sel_y), TRIVIAL))
            break
    return entries


def trivial_entries(g: BipartiteMultigraph) -> list[CertEntry]:
    """Star of a maximum-degree vertex vs. a greedy induced matching.

    Whichever family realizes more distinct sizes wins (star on ties); an
    empty graph certifies just {0}.
    """
    star = _star_entries(g)
    matching = _matching_entries(g)
    return _verified(g, star if len(star) >= len(matching) else matching)


# -- half-regular warm-up: remove one Y-vertex -----------------------------


def warm_up_entries(g: BipartiteMultigraph) -> list[CertEntry] | None:
    """Sizes i*d + j*(d-1) after removing the best-balancing Y-vertex.

    Requires a simple graph that is half-regular on X; returns None when
    there is no Y-vertex to remove.
    """
    if not g.is_simple():
        raise InputError("construction requires a simple graph")
    if not g.is_half_regular():
        raise InputError("construction requires a half-regular X side")
    if g.ny == 0:
        return None
    d = g.deg_x(0)
    best_y, best_bal = 0, -1
    for y in range(g.ny):
        bal = min(g.nx - g.deg_y(y), g.deg_y(y))
        if bal > best_bal:
            best_y, best_bal = y, bal
    adjacent = {x for x, _ in g.y_row(best_y)}
    class_d = [x for x in range(g.nx) if x not in adjacent]
    class_dm1 = sorted(adjacent)
    k, l = len(class_d), len(class_dm1)
    if d == 1:
        sizes = repeated(k, 1)
    else:
        sizes = subset_sums(Seq.run(k, d).concat(Seq.run(l, d - 1)))
    ys = tuple(y for y in range(g.ny) if y != best_y)
    entries = []
    for sigma in sizes.values():
        for i in range(min(k, sigma // d if d else k) + 1):
            rem = sigma - i * d
            if rem < 0:
                break
            if d == 1:
                if rem == 0:
                    entries.append(
                        CertEntry(sigma, tuple(sorted(class_d[:i])), ys, WARM_UP)
                    )
                    break
            elif rem % (d - 1) == 0 and rem // (d - 1) <= l:
                j = rem // (d - 1)
                xs = tuple(sorted(class_d[:i] + class_dm1[:j]))
                entries.append(CertEntry(sigma, xs, ys, WARM_UP))
                break
    return _verified(g, entries)


# -- degree multiples ------------------------------------------------------


def degree_multiples_entries(h: BipartiteMultigraph) -> list[CertEntry]:
    """Sizes 0, d, 2d, ..., kd from X-prefixes of a half-regular multigraph."""
    if not h.is_half_regular():
        raise InputError("construction requires a half-regular X side")
    d = h.deg_x(0)
    ys = tuple(range(h.ny))
    if d == 0:
        return [CertEntry(0, (), (), MULTIPLES)]
    entries = [
        CertEntry(j * d, tuple(range(j)), ys if j else (), MULTIPLES)
        for j in range(h.nx + 1)
    ]
    return _verified(h, entries)


# -- two multiplicity classes at one Y-vertex ------------------------------


def two_class_entries(
    h: BipartiteMultigraph, y: int, a: int, b: int
) -> list[CertEntry]:
    """All sizes (d-a)|V1| + (d-b)|V2| over Y minus {y}.

    V1 ranges over prefixes of the class joined to y with multiplicity a,
    V2 over the multiplicity-b class; realizers take the least V1 first.
    """
    if not h.is_half_regular():
        raise InputError("construction requires a half-regular X side")
    if not 0 <= a < b:
        raise InputError("need multiplicities 0 <= a < b")
    d = h.deg_x(0)
    if d <= b:
        raise InputError(f"inapplicable: degree {d} <= class multiplicity {b}")
    class_a = [x for x in range(h.nx) if h.mult(x, y) == a]
    class_b = [x for x in range(h.nx) if h.mult(x, y) == b]
    if not class_a or not class_b:
        raise InputError("both multiplicity classes must be nonempty")
    va, vb = d - a, d - b
    ka, kb = len(class_a), len(class_b)
    sizes = sumset_add(repeated(ka, va), repeated(kb, vb))
    ys = tuple(yy for yy in range(h.ny) if yy != y)
    entries = []
    for sigma in sizes.values():
        for i in range(min(ka, sigma // va) + 1):
            rem = sigma - i * va
            if rem % vb == 0 and rem // vb <= kb:
                xs = tuple(sorted(class_a[:i] + class_b[: rem // vb]))
                entries.append(CertEntry(sigma, xs, ys if xs else (), TWO_CLASS))
                break
    return _verified(h, entries)


# -- sparse chain ----------------------------------------------------------


def sparse_chain_entries(
    f: BipartiteMultigraph, l: int, r: int | None = None
) -> list[CertEntry]:
    """Distinct sizes 1..l from a multigraph with multiplicities at most r.

    Follows the recursive set-building argument: prune Y until every
    survivor has a private X-neighbor, then either walk nested subsets of
    one big neighborhood or grow/swap a vertex set so the induced count
    climbs in steps of at most r. With l >= r this yields at least
    ceil(l / 2r) sizes, all inside [1, l].
    """
    if r is None:
        r = f.max_multiplicity()
    if f.max_multiplicity() > r:
        raise InputError(f"multiplicity cap {r} below actual maximum")
    if r < 1:
        raise InputError("graph has no edges")
    if not 1 <= l <= f.nx:
        raise InputError(f"need 1 <= l <= |X| = {f.nx}")
    deg_alive = [f.deg_x(x) for x in range(f.nx)]
    gamma_alive = [len(f.x_row(x)) for x in range(f.nx)]
    if 0 in deg_alive or any(f.deg_y(y) == 0 for y in range(f.ny)):
        raise InputError("every vertex must have positive degree")

    # prune Y until each survivor owns a private neighbor
    alive = set(range(f.ny))
    changed = True
    while changed:
        changed = False
        for y in sorted(alive):
            if all(gamma_alive[x] >= 2 for x, _ in f.y_row(y)):
                alive.discard(y)
                for x, w in f.y_row(y):
                    gamma_alive[x] -= 1
                    deg_alive[x] -= w
                changed = True
    alive_sorted = sorted(alive)

    n = f.nx
    big_y, big_gamma = None, 0
    for y in alive_sorted:
        if len(f.y_row(y)) > big_gamma:
            big_y, big_gamma = y, len(f.y_row(y))

    entries: list[CertEntry] = []
    if big_y is not None and big_gamma * 2 * r > n:
        # nested subsets of one big neighborhood, slimmest multiplicities first
        nbrs = sorted(f.y_row(big_y), key=lambda t: (t[1], t[0]))
        total = 0
        picked: list[int] = []
        for x, w in nbrs:
            if total + w > l:
                break
            picked.append(x)
            total += w
            entries.append(
                CertEntry(total, tuple(sorted(picked)), (big_y,), SPARSE_CHAIN)
            )
        return _verified(f, entries)

    x_of: dict[int, int] = {}
    for y in alive_sorted:
        x_of[y] = min(x for x, _ in f.y_row(y) if gamma_alive[x] == 1)
    ys_witness = tuple(alive_sorted)
    current: set[int] = set()
    count = 0
    while True:
        fresh = next((y for y in alive_sorted if x_of[y] not in current), None)
        if fresh is not None:
            step = deg_alive[x_of[fresh]]
            if count + step > l:
                break
            current.add(x_of[fresh])
            count += step
        else:
            if len(current) > n / 2:
                break
            outside = [
                x
                for x in range(n)
                if x not in current and deg_alive[x] <= len(alive_sorted)
            ]
            if not outside:
                break
            incoming = outside[0]
            deficit = deg_alive[incoming]
            removed: list[int] = []
            for y in alive_sorted:
                if deficit <= r:
                    break
                deficit -= deg_alive[x_of[y]]
                removed.append(x_of[y])
            if not 0 < deficit <= r or count + deficit > l:
                break
            current.difference_update(removed)
            current.add(incoming)
            count += deficit
        entries.append(
            CertEntry(count, tuple(sorted(current)), ys_witness, SPARSE_CHAIN)
        )
    return _verified(f, entries)


# -- type-zero construction ------------------------------------------------


def sparse_types_entries(
    h: BipartiteMultigraph, profile: ScaleProfile
) -> tuple[list[CertEntry] | None, dict]:
    """Chain values inside a union of type-0 neighborhoods, lifted by d|X'|.

    Applicable when every Y-vertex is typed and almost all are type-0.
    Emitted sizes are d*(|X'| + |S'|) - c over chain pairs (S', W) with
    e(S' ∪ W) = c; c-values are kept distinct modulo d (collisions are
    dropped and counted in the diagnostics).
    """
    if not h.is_half_regular():
        raise InputError("construction requires a half-regular X side")
    if h.ny == 0:
        raise InputError("Y side is empty")
    k, m = h.nx, h.m
    d = h.deg_x(0)
    diag: dict = {}
    types = vertex_types(h, profile)
    if any(t is None for t in types):
        diag["reason"] = "some Y-vertex has no dominant multiplicity class"
        return None, diag
    nonzero = sum(1 for t in types if t)
    cutoff = profile.sparse_types_cutoff(d, m)
    if nonzero > cutoff:
        diag["reason"] = f"{nonzero} nonzero-type vertices exceed cutoff {cutoff}"
        return None, diag
    lo, hi = profile.window(k, m)
    union: set[int] = set()
    picked_u: list[int] = []
    for y in range(h.ny):
        if types[y] != 0:
            continue
        if len(union) >= lo:
            break
        widened = union | {x for x, _ in h.y_row(y)}
        if len(widened) <= hi:
            picked_u.append(y)
            union = widened
    diag["window"] = (lo, hi)
    diag["reached"] = len(union)
    if len(union) < lo or not picked_u:
        diag["reason"] = "type-0 neighborhood union cannot land in the window"
        return None, diag

    core = sorted(union)
    sub, x_map, y_map = induced_subgraph(h, core, picked_u)
    chain_target = min(len(core), d)
    chain = sparse_chain_entries(sub, chain_target, sub.max_multiplicity())
    kept: list[tuple[int, tuple[int, ...], set[int]]] = []
    seen_mod: set[int] = set()
    dropped = 0
    for entry in chain:
        residue = entry.size % d
        if residue in seen_mod:
            dropped += 1
            continue
        seen_mod.add(residue)
        kept.append(
            (
                entry.size,
                tuple(x_map[i] for i in entry.xs),
                {y_map[i] for i in entry.ys},
            )
        )
    diag["chain_sizes"] = len(chain)
    diag["dropped_mod_d"] = dropped
    rest = [x for x in range(k) if x not in union]
    all_ys = set(range(h.ny))
    entries = [CertEntry(0, (), (), TYPE_ZERO)]
    seen_sizes = {0}
    for j in range(len(rest) + 1):
        for c, core_xs, removed_ys in kept:
            sigma = d * (j + len(core_xs)) - c
            if sigma in seen_sizes:
                continue
            seen_sizes.add(sigma)
            xs = tuple(sorted(core_xs + tuple(rest[:j])))
            ys = tuple(sorted(all_ys - removed_ys))
            entries.append(CertEntry(sigma, xs, ys, TYPE_ZERO))
    return _verified(h, entries), diag


# -- common-type construction ----------------------------------------------


def _lex_least_subset(
    items: list[tuple[int, int]], target: int
) -> list[int] | None:
    """Lexicographically least index subset of (index, weight) summing to target."""
    suffix = [0] * (len(items) + 1)
    suffix[len(items)] = 1
    for i in range(len(items) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (suffix[i + 1] << items[i][1])
    if not (suffix[0] >> target) & 1:
        return None
    picked: list[int] = []
    rest = target
    for i, (idx, w) in enumerate(items):
        if rest == 0:
            break
        if w <= rest and (suffix[i + 1] >> (rest - w)) & 1:
            picked.append(idx)
            rest -= w
    return picked


def common_type_entries(
    h: BipartiteMultigraph, profile: ScaleProfile
) -> tuple[str | None, list[CertEntry] | None, dict]:
    """Dispatch on a common nonzero type: product grid or gcd-shift sumset.

    Intersect the multiplicity-tau neighborhoods of a block U of same-type
    vertices into a core S, then delete further nonzero-type vertices one
    at a time. While at least 2/3 of S keeps one common degree (and that
    degree tracks the deletion recurrence), the common degrees multiply
    prefix sizes of S; the first deletion breaking this splits S and the
    gcd-minimizing shift turns the split into one large sumset.
    """
    if not h.is_half_regular():
        raise InputError("construction requires a half-regular X side")
    k, m = h.nx, h.m
    d = h.deg_x(0)
    diag: dict = {}
    types = vertex_types(h, profile)
    p = profile.common_type_count(m)
    q = profile.deletion_count(d, m)
    diag["p"], diag["q"] = p, q
    nonzero_typed = [y for y in range(h.ny) if types[y]]
    if len(nonzero_typed) < p + q:
        diag["reason"] = (
            f"{len(nonzero_typed)} nonzero-type vertices cannot supply p+q = {p + q}"
        )
        return None, None, diag
    by_type = Counter(types[y] for y in nonzero_typed)
    tau, tau_count = max(by_type.items(), key=lambda kv: (kv[1], -kv[0]))
    if tau_count < p:
        diag["reason"] = f"largest common type has {tau_count} < p = {p} vertices"
        return None, None, diag
    block = [y for y in nonzero_typed if types[y] == tau][:p]
    core = [
        x for x in range(h.nx) if all(h.mult(x, y) == tau for y in block)
    ]
    diag["tau"], diag["core"] = tau, len(core)
    if not core:
        diag["reason"] = "common-type neighborhood intersection is empty"
        return None, None, diag
    deletions = [y for y in nonzero_typed if y not in block][:q]
    s = len(core)
    degree = {x: d for x in core}
    alpha_prev = d
    removed: list[int] = []
    grid: list[tuple[int, list[int], tuple[int, ...]]] = []
    for y_i in deletions:
        tau_i = types[y_i]
        assert tau_i
        for x in core:
            degree[x] -= h.mult(x, y_i)
        removed.append(y_i)
        hist = Counter(degree.values())
        alpha_cand, cnt = max(hist.items(), key=lambda kv: (kv[1], kv[0]))
        expected = alpha_prev - tau_i
        if 3 * cnt >= 2 * s and alpha_cand == expected:
            members = [x for x in core if degree[x] == expected]
            ys = tuple(y for y in range(h.ny) if y not in removed)
            grid.append((expected, members, ys))
            alpha_prev = expected
            continue

        # split: gcd-shift construction at the first non-uniform deletion
        alpha = expected
        s_alpha = [x for x in core if degree[x] == alpha]
        s_beta = [x for x in core if degree[x] != alpha]
        diag["split_at"] = len(removed)
        diag["alpha"] = alpha
        if not s_alpha or not s_beta:
            diag["reason"] = "degenerate split: one side of the core is empty"
            return None, None, diag
        shift_cap = min(profile.shift_bound(m), p)
        buckets: dict[int, list[tuple[int, int]]] = {}
        for x in s_beta:
            res = min_gcd_shift_pair(alpha, degree[x], tau, shift_cap + 1)
            buckets.setdefault(res.i, []).append((x, res.g))
        shift, bucket = max(buckets.items(), key=lambda kv: (len(kv[1]), -kv[0]))
        for x, claimed in bucket:
            if gcd(alpha - shift * tau, degree[x] - shift * tau) != claimed:
                raise InternalCheckError("gcd-shift bucket value does not recheck")
        diag["shift"] = shift
        diag["bucket"] = len(bucket)
        rep_val = alpha - shift * tau
        rep_cnt = len(s_alpha)
        terms = [(x, degree[x] - shift * tau) for x, _ in bucket]
        pos_terms = [(x, t) for x, t in terms if t >= 1]
        base = subset_sums(Seq.of(t for _, t in pos_terms))
        sizes = (
            sumset_add(base, repeated(rep_cnt, rep_val)) if rep_val >= 1 else base
        )
        hidden = set(removed) | set(block[:shift])
        ys = tuple(y for y in range(h.ny) if y not in hidden)
        entries = []
        for sigma in sizes.values():
            top = sigma // rep_val if rep_val else 0
            for j in range(min(rep_cnt, top) + 1):
                rem = sigma - rep_val * j
                subset = _lex_least_subset(pos_terms, rem)
                if subset is None:
                    continue
                xs = tuple(sorted(s_alpha[:j] + subset))
                entries.append(
                    CertEntry(sigma, xs, ys if xs else (), GCD_SHIFT)
                )
                break
        return GCD_SHIFT, _verified(h, entries), diag

    entries = [CertEntry(0, (), (), PRODUCT_GRID)]
    seen = {0}
    for alpha_i, members, ys in grid:
        for j in range(1, len(members) + 1):
            sigma = alpha_i * j
            if sigma in seen:
                continue
            seen.add(sigma)
            entries.append(
                CertEntry(sigma, tuple(sorted(members[:j])), ys, PRODUCT_GRID)
            )
    diag["grid_levels"] = len(grid)
    return PRODUCT_GRID, _verified(h, entries), diag
