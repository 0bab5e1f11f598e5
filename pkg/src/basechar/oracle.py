"""Brute-force permutation-group engine used as ground truth.

Groups are stored as full element lists (no stabilizer chains); induced
actions carry one table row per parent element, so stabilizers are sets of
element indices and labels stay well-defined even when the action is not
faithful. Everything here is deliberately simple and slow; the fast formula
code is validated against it, never the other way around.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product
import math
import random
import re

import numpy as np

from .errors import CapacityError, ConsistencyError, InputError

MAX_CLOSURE_ORDER = 10 ** 6
MAX_INDUCED_DEGREE = 10 ** 4
MAX_TABLE_CELLS = 5 * 10 ** 7
MAX_CONTROLLING_DEGREE = 24
MAX_DISTINGUISHING_POINTS = 12


# ---------------------------------------------------------------------------
# permutations as tuples of images, 0-based


def identity_perm(degree):
    return tuple(range(degree))


def compose(p, q):
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def inverse(p):
    inv = [0] * len(p)
    for i, image in enumerate(p):
        inv[image] = i
    return tuple(inv)


def check_perm(p):
    if sorted(p) != list(range(len(p))):
        raise InputError(f"not a permutation: {p!r}")


def perm_sign(p):
    """Sign of a permutation: +1 even, -1 odd."""
    seen = [False] * len(p)
    sign = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree):
    """Parse 1-based cycle notation like ``(1,2)(3,4)`` at a fixed degree."""
    body = text.replace(" ", "")
    if not _CYCLE_RE.sub("", body) == "":
        raise InputError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    for cycle in _CYCLE_RE.findall(body):
        if not cycle:
            continue
        try:
            points = [int(part) - 1 for part in cycle.split(",")]
        except ValueError:
            raise InputError(f"malformed cycle notation: {text!r}") from None
        if len(set(points)) != len(points):
            raise InputError(f"repeated point in cycle: {text!r}")
        for point in points:
            if not 0 <= point < degree:
                raise InputError(f"point out of range in {text!r}")
            if images[point] != point:
                raise InputError(f"point repeated across cycles: {text!r}")
        for i, point in enumerate(points):
            images[point] = points[(i + 1) % len(points)]
    return tuple(images)


def max_point_of_cycles(text):
    best = 0
    for cycle in _CYCLE_RE.findall(text.replace(" ", "")):
        if cycle:
            try:
                best = max(best, max(int(part) for part in cycle.split(",")))
            except ValueError:
                raise InputError(f"malformed cycle notation: {text!r}") from None
    return best


def format_cycles(p):
    """1-based cycle notation, identity printed as ``()``."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(str(j + 1))
            j = p[j]
        out.append("(" + ",".join(cycle) + ")")
    return "".join(out) if out else "()"


# ---------------------------------------------------------------------------
# groups


@dataclass
class LabeledGroup:
    """Full element list, optionally with a {+1,-1} label per element."""

    degree: int
    elements: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != len(self.elements):
            raise InputError("labels and elements differ in length")

    @property
    def order(self):
        return len(self.elements)

    def table(self):
        return np.array(self.elements, dtype=np.int32)


def closure(generators, labels=None, degree=None, max_order=MAX_CLOSURE_ORDER):
    """Close a generator list under composition, propagating labels.

    Labels, when given, ride along multiplicatively; reaching the same
    element with both signs means the labeling is not a homomorphism.
    """
    generators = [tuple(g) for g in generators]
    for g in generators:
        check_perm(g)
    if generators:
        degrees = {len(g) for g in generators}
        if len(degrees) != 1:
            raise InputError("generators have mixed degrees")
        degree = degrees.pop()
    elif degree is None:
        raise InputError("empty generator list needs an explicit degree")
    if labels is not None:
        labels = [int(x) for x in labels]
        if len(labels) != len(generators):
            raise InputError("one label per generator required")
        if any(x not in (1, -1) for x in labels):
            raise InputError("labels must be +1 or -1")
    ident = identity_perm(degree)
    found = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for element in frontier:
            for gi, g in enumerate(generators):
                image = compose(element, g)
                label = found[element] * (labels[gi] if labels else 1)
                known = found.get(image)
                if known is None:
                    if len(found) >= max_order:
                        raise CapacityError(
                            f"group order exceeds {max_order}")
                    found[image] = label
                    nxt.append(image)
                elif known != label:
                    raise InputError(
                        "generator labels do not define a homomorphism")
        frontier = nxt
    elements = tuple(sorted(found))
    out_labels = tuple(found[e] for e in elements) if labels else None
    return LabeledGroup(degree, elements, out_labels)


def with_sign_labels(group):
    """Relabel every element with its permutation sign."""
    return LabeledGroup(group.degree, group.elements,
                        tuple(perm_sign(e) for e in group.elements))


def trivial_group(degree):
    return LabeledGroup(degree, (identity_perm(degree),), None)


def symmetric_group(n, sign_labels=True):
    if n < 1:
        raise InputError("degree must be positive")
    if math.factorial(n) > MAX_CLOSURE_ORDER:
        raise CapacityError(f"order {n}! exceeds {MAX_CLOSURE_ORDER}")
    elements = tuple(permutations(range(n)))
    labels = tuple(perm_sign(e) for e in elements) if sign_labels else None
    return LabeledGroup(n, elements, labels)


def alternating_group(n):
    if n < 1:
        raise InputError("degree must be positive")
    if math.factorial(n) > MAX_CLOSURE_ORDER:
        raise CapacityError(f"order {n}! exceeds {MAX_CLOSURE_ORDER}")
    elements = tuple(e for e in permutations(range(n)) if perm_sign(e) == 1)
    return LabeledGroup(n, elements, None)


def _is_prime(q):
    if q < 2:
        return False
    for d in range(2, int(q ** 0.5) + 1):
        if q % d == 0:
            return False
    return True


def pgl2(q):
    """PGL_2(q) as Moebius maps on the projective line over F_q.

    Points 0..q-1 are field elements, point q is infinity. Each element is
    labeled +1 iff its determinant is a nonzero square mod q; the kernel of
    that labeling is PSL_2(q).
    """
    if not _is_prime(q) or q % 2 == 0 or q > 31:
        raise InputError("q must be an odd prime at most 31")
    squares = {(x * x) % q for x in range(1, q)}
    infinity = q
    found = {}
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    det = (a * d - b * c) % q
                    if det == 0:
                        continue
                    images = []
                    for x in range(q):
                        den = (c * x + d) % q
                        if den == 0:
                            images.append(infinity)
                        else:
                            num = (a * x + b) % q
                            images.append((num * pow(den, q - 2, q)) % q)
                    images.append((a * pow(c, q - 2, q)) % q if c % q else infinity)
                    perm = tuple(images)
                    label = 1 if det in squares else -1
                    known = found.get(perm)
                    if known is None:
                        found[perm] = label
                    elif known != label:
                        raise ConsistencyError(
                            "determinant square class not well-defined")
    elements = tuple(sorted(found))
    return LabeledGroup(q + 1, elements, tuple(found[e] for e in elements))


# ---------------------------------------------------------------------------
# induced actions


@dataclass
class InducedAction:
    """Action table with one row per parent element.

    Rows may repeat when the action is not faithful; stabilizers are sets of
    row indices, so parent labels carry over unchanged.
    """

    degree: int
    table: np.ndarray
    labels: np.ndarray | None
    point_names: tuple
    description: str

    @property
    def order(self):
        return self.table.shape[0]


def _check_table_capacity(order, degree):
    if degree > MAX_INDUCED_DEGREE:
        raise CapacityError(
            f"induced degree {degree} exceeds {MAX_INDUCED_DEGREE}")
    if order * degree > MAX_TABLE_CELLS:
        raise CapacityError("action table too large")


def _label_array(group):
    if group.labels is None:
        return None
    return np.array(group.labels, dtype=np.int8)


def natural_action(group):
    _check_table_capacity(group.order, group.degree)
    names = tuple(str(i + 1) for i in range(group.degree))
    return InducedAction(group.degree, group.table(), _label_array(group),
                         names, f"natural action on {group.degree} points")


def act_on_subsets(group, k):
    """Induced action on the k-element subsets of the domain."""
    if not 1 <= k <= group.degree:
        raise InputError("k out of range")
    points = list(combinations(range(group.degree), k))
    _check_table_capacity(group.order, len(points))
    index = {s: i for i, s in enumerate(points)}
    table = np.empty((group.order, len(points)), dtype=np.int32)
    for ei, element in enumerate(group.elements):
        for pi, subset in enumerate(points):
            table[ei, pi] = index[tuple(sorted(element[x] for x in subset))]
    names = tuple("{" + ",".join(str(x + 1) for x in s) + "}" for s in points)
    return InducedAction(len(points), table, _label_array(group), names,
                         f"action on {k}-subsets")


def _uniform_partitions(n, r, s):
    # blocks as sorted tuples; partition as the block list sorted by minimum
    def extend(free):
        if not free:
            yield ()
            return
        first = free[0]
        rest = free[1:]
        for others in combinations(rest, s - 1):
            block = (first,) + others
            remaining = [p for p in rest if p not in others]
            for tail in extend(remaining):
                yield (block,) + tail
    return list(extend(tuple(range(n))))


def act_on_uniform_partitions(group, r, s):
    """Induced action on partitions of the domain into r blocks of size s."""
    if r < 1 or s < 1 or r * s != group.degree:
        raise InputError("need degree = r*s with positive r, s")
    points = _uniform_partitions(group.degree, r, s)
    _check_table_capacity(group.order, len(points))
    index = {p: i for i, p in enumerate(points)}
    table = np.empty((group.order, len(points)), dtype=np.int32)
    for ei, element in enumerate(group.elements):
        for pi, part in enumerate(points):
            image = sorted(tuple(sorted(element[x] for x in block))
                           for block in part)
            table[ei, pi] = index[tuple(image)]
    names = tuple("|".join("".join(str(x + 1) for x in block)
                           for block in part) for part in points)
    return InducedAction(len(points), table, _label_array(group), names,
                         f"action on uniform ({r}x{s})-partitions")


def product_action_wreath(base, r, top_generators=None):
    """Wreath product with product action on r-tuples of base points.

    The top group is S_r unless explicit generators on r points are given.
    An element (g_1, ..., g_r; sigma) maps coordinate i of a tuple to the
    g_{sigma^-1(i)} image of coordinate sigma^-1(i). Base labels, when
    present, carry over as the product of the per-coordinate labels.
    """
    if isinstance(base, LabeledGroup):
        base = natural_action(base)
    if r < 1:
        raise InputError("r must be positive")
    if top_generators is None:
        top = list(permutations(range(r)))
    else:
        top = list(closure(top_generators, degree=r).elements)
    degree = base.degree ** r
    order = base.order ** r * len(top)
    if order > MAX_CLOSURE_ORDER:
        raise CapacityError(f"wreath order {order} exceeds {MAX_CLOSURE_ORDER}")
    _check_table_capacity(order, degree)

    weights = [base.degree ** (r - 1 - i) for i in range(r)]
    digits = np.empty((degree, r), dtype=np.int64)
    for i in range(r):
        digits[:, i] = (np.arange(degree) // weights[i]) % base.degree

    table = np.empty((order, degree), dtype=np.int32)
    labels = None if base.labels is None else np.empty(order, dtype=np.int8)
    names = tuple("(" + ",".join(base.point_names[d] for d in row) + ")"
                  for row in digits)
    row = 0
    for bottom in product(range(base.order), repeat=r):
        for sigma in top:
            image = np.zeros(degree, dtype=np.int64)
            for i in range(r):
                src = sigma.index(i)
                image += base.table[bottom[src]][digits[:, src]] * weights[i]
            table[row] = image
            if labels is not None:
                sign = 1
                for gi in bottom:
                    sign *= int(base.labels[gi])
                labels[row] = sign
            row += 1
    description = f"wreath product action on {degree} tuples"
    return InducedAction(degree, table, labels, names, description)


# ---------------------------------------------------------------------------
# orbits, bases, regular orbits


def _kernel_size(table):
    return int(np.count_nonzero(
        (table == np.arange(table.shape[1])).all(axis=1)))


def kernel_order(action):
    """Number of elements acting trivially; 1 means the action is faithful."""
    return _kernel_size(action.table)


def _tree_counts(table, l, rows):
    """Count (all, regular) orbits on Omega^l by stabilizer-pruned search.

    Orbits of tuples extending a partial tuple t correspond to orbits of the
    stabilizer of t on points; a node with trivial stabilizer at depth i
    contributes degree^(l-i) leaves, all regular, without recursion.
    """
    degree = table.shape[1]

    def walk(stab, depth):
        if stab.shape[0] == 1:
            leaves = degree ** (l - depth)
            return leaves, leaves
        if depth == l:
            return 1, 0
        sub = table[stab]
        total = regular = 0
        seen = np.zeros(degree, dtype=bool)
        for point in range(degree):
            if seen[point]:
                continue
            column = sub[:, point]
            seen[np.unique(column)] = True
            t, reg = walk(stab[column == point], depth + 1)
            total += t
            regular += reg
        return total, regular

    return walk(rows, 0)


def regular_orbits_on_tuples(action, l):
    """Exact number of orbits on Omega^l whose tuples have trivial stabilizer."""
    if l < 0:
        raise InputError("l must be nonnegative")
    rows = np.arange(action.order)
    return _tree_counts(action.table, l, rows)[1]


def orbit_counts_bruteforce(action, l):
    """Orbit counts (o, o_K) of the group and its label kernel on Omega^l."""
    if l < 0:
        raise InputError("l must be nonnegative")
    if action.labels is None:
        raise InputError("labels required for kernel orbit counts")
    rows = np.arange(action.order)
    o = _tree_counts(action.table, l, rows)[0]
    kernel_rows = rows[np.asarray(action.labels) == 1]
    o_k = _tree_counts(action.table, l, kernel_rows)[0]
    return o, o_k


def base_size_bruteforce(action):
    """Least l such that some l-tuple of points has trivial stabilizer.

    Only stabilizer-orbit representatives are tried, points fixed by the
    current stabilizer are skipped (they never shrink it), and branches that
    cannot beat the best known depth are cut.
    """
    table = action.table
    degree = table.shape[1]
    if _kernel_size(table) > 1:
        raise InputError("action is not faithful, no base exists")

    best = [degree]

    def walk(stab, depth):
        if stab.shape[0] == 1:
            best[0] = min(best[0], depth)
            return
        if depth + 1 >= best[0]:
            return
        sub = table[stab]
        seen = np.zeros(degree, dtype=bool)
        children = []
        for point in range(degree):
            if seen[point]:
                continue
            column = sub[:, point]
            orbit = np.unique(column)
            seen[orbit] = True
            if orbit.shape[0] == 1:
                continue
            children.append(stab[column == point])
        children.sort(key=lambda child: child.shape[0])
        for child in children:
            walk(child, depth + 1)

    walk(np.arange(action.order), 0)
    return best[0]


# ---------------------------------------------------------------------------
# base-controlling verification


@dataclass(frozen=True)
class ControllingVerdict:
    """Outcome of the base-controlling check.

    A violation is a point set with a nontrivial stabilizer whose labels are
    all +1; the reverse direction cannot fail, a trivial stabilizer has label
    image {+1} by definition.
    """

    controlling: bool
    counterexample: tuple | None = None
    stabilizer_order: int | None = None
    label_image: tuple | None = None


def is_base_controlling(action, max_degree=MAX_CONTROLLING_DEGREE):
    """Check: every point set has trivial stabilizer iff its labels are all +1.

    The stabilizer of a tuple equals the stabilizer of its entry set, so
    subsets of points cover every tuple. Subsets whose stabilizer is already
    trivial are pruned (all supersets stay consistent), and points fixed by
    the current stabilizer are skipped (they cannot change it).
    """
    if action.labels is None:
        raise InputError("labels required")
    if action.degree > max_degree:
        raise CapacityError(
            f"degree {action.degree} exceeds {max_degree} for subset search")
    labels = np.asarray(action.labels)
    if not (labels == -1).any():
        raise InputError(
            "labels are all +1: degenerate, controls only the trivial group")
    if int((labels == 1).sum()) * 2 != action.order:
        raise InputError("labels are not a homomorphism onto {1,-1}")
    table = action.table
    degree = action.degree

    def walk(stab, start, chosen):
        if not (labels[stab] == -1).any():
            return ControllingVerdict(
                False, tuple(action.point_names[i] for i in chosen),
                int(stab.shape[0]), (1,))
        sub = table[stab]
        for point in range(start, degree):
            column = sub[:, point]
            child = stab[column == point]
            if child.shape[0] == 1 or child.shape[0] == stab.shape[0]:
                continue
            verdict = walk(child, point + 1, chosen + (point,))
            if not verdict.controlling:
                return verdict
        return ControllingVerdict(True)

    return walk(np.arange(action.order), 0, ())


# ---------------------------------------------------------------------------
# distinguishing number


def distinguishing_number(group, max_points=MAX_DISTINGUISHING_POINTS):
    """Least c such that some coloring of the domain with at most c colors
    has trivial stabilizer (elements preserving every color class setwise).

    Colorings are enumerated up to color renaming as restricted growth
    strings, so each set partition of the domain is tested once.
    """
    m = group.degree
    if m > max_points:
        raise CapacityError(f"degree {m} exceeds {max_points}")
    table = group.table()
    if group.order == 1:
        return 1

    def any_distinguishing(classes):
        # colorings with exactly `classes` parts, new color first at each point
        colors = np.zeros(m, dtype=np.int32)

        def walk(point, used):
            if m - point < classes - used:
                return False
            if point == m:
                if used != classes:
                    return False
                fixes = (colors[table] == colors).all(axis=1)
                return int(fixes.sum()) == 1
            top = min(used + 1, classes)
            for color in range(top):
                colors[point] = color
                if walk(point + 1, max(used, color + 1)):
                    return True
            return False

        return walk(0, 0)

    for classes in range(1, m + 1):
        if any_distinguishing(classes):
            return classes
    raise ConsistencyError("no distinguishing coloring found for a faithful group")


# ---------------------------------------------------------------------------
# label spot check


def label_homomorphism_spot_check(group, samples=50, seed=0):
    """Check label multiplicativity on random element pairs.

    Failure raises ConsistencyError: labels produced by the constructors in
    this module are homomorphisms by construction, so a violation is a bug.
    """
    if group.labels is None:
        raise InputError("group carries no labels")
    rng = random.Random(seed)
    index = {element: i for i, element in enumerate(group.elements)}
    for _ in range(samples):
        i = rng.randrange(group.order)
        j = rng.randrange(group.order)
        prod_label = group.labels[index[compose(group.elements[i],
                                                group.elements[j])]]
        if prod_label != group.labels[i] * group.labels[j]:
            raise ConsistencyError("labels are not multiplicative")
    return samples


# ---------------------------------------------------------------------------
# group specification mini-format


@dataclass(frozen=True)
class ParsedGroup:
    """A parsed group spec: the induced action plus what it was built from."""

    action: InducedAction
    base_kind: str
    base_param: int | None
    action_tags: tuple
    base_group: LabeledGroup = None


def _parse_base(token, labels_mode):
    if token.startswith("sn:"):
        n = _parse_int(token[3:], "sn degree")
        return symmetric_group(n, sign_labels=True), "sn", n
    if token.startswith("an:"):
        n = _parse_int(token[3:], "an degree")
        group = alternating_group(n)
        if labels_mode == "sgn":
            group = with_sign_labels(group)
        return group, "an", n
    if token.startswith("pgl2:"):
        q = _parse_int(token[5:], "pgl2 parameter")
        group = pgl2(q)
        if labels_mode == "sgn":
            group = with_sign_labels(group)
        return group, "pgl2", q
    if token.startswith("gens:"):
        raw = token[5:].split(";")
        if not any(part.strip() for part in raw):
            raise InputError("empty generator list")
        signs = []
        bodies = []
        for part in raw:
            part = part.strip()
            if part.startswith("!"):
                signs.append(-1)
                part = part[1:]
            else:
                signs.append(1)
            bodies.append(part)
        degree = max(max_point_of_cycles(body) for body in bodies)
        if degree == 0:
            raise InputError("cannot infer degree from identity generators")
        gens = [parse_cycles(body, degree) for body in bodies]
        explicit = any(sign == -1 for sign in signs)
        group = closure(gens, labels=signs if explicit else None)
        if labels_mode == "sgn" or (labels_mode == "auto" and not explicit):
            group = with_sign_labels(group)
        return group, "gens", None
    raise InputError(f"unknown group spec: {token!r}")


def _parse_int(text, what):
    try:
        return int(text)
    except ValueError:
        raise InputError(f"bad {what}: {text!r}") from None


def parse_group_spec(spec, labels_mode="auto"):
    """Parse specs like ``sn:6/subsets:2``, ``pgl2:7``, ``an:5/wreath:2``,
    ``gens:!(1,2);(1,2,3,4)/subsets:2``.

    The base group comes first; ``/subsets:<k>``, ``/partitions:<r>x<s>``
    and ``/wreath:<r>`` apply induced actions in order (subsets and
    partitions only directly on the base group). ``labels_mode`` is ``auto``
    (sign for sn, determinant class for pgl2, explicit ``!`` marks for gens)
    or ``sgn`` (permutation sign of the base elements in every case).
    """
    if labels_mode not in ("auto", "sgn"):
        raise InputError(f"unknown labels mode: {labels_mode!r}")
    parts = spec.strip().split("/")
    group, kind, param = _parse_base(parts[0].strip(), labels_mode)
    action = None
    tags = []
    for suffix in parts[1:]:
        suffix = suffix.strip()
        if suffix.startswith("subsets:"):
            if action is not None:
                raise InputError("subsets action must come first")
            action = act_on_subsets(group, _parse_int(suffix[8:], "subset size"))
        elif suffix.startswith("partitions:"):
            if action is not None:
                raise InputError("partitions action must come first")
            body = suffix[len("partitions:"):]
            if "x" not in body:
                raise InputError(f"bad partitions suffix: {suffix!r}")
            r_text, s_text = body.split("x", 1)
            r = _parse_int(r_text, "block count")
            s = _parse_int(s_text, "block size")
            action = act_on_uniform_partitions(group, r, s)
        elif suffix.startswith("wreath:"):
            r = _parse_int(suffix[7:], "wreath arity")
            action = product_action_wreath(
                action if action is not None else group, r)
        else:
            raise InputError(f"unknown action suffix: {suffix!r}")
        tags.append(suffix)
    if action is None:
        action = natural_action(group)
    return ParsedGroup(action, kind, param, tuple(tags), group)
