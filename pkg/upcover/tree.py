"""Pseudo-polynomial single-facility solver on trees with integer parameters."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from upcover.errors import FacilityCountError, NonIntegerInstance, NotATree
from upcover.model import EdgeKey, Instance, Solution, UpgradePlan, classify, require_valid

LOGGER = logging.getLogger("Upcover.Tree")

INCREMENTAL = "incremental"
REBUILD = "rebuild"


@dataclass(frozen=True)
class Link:
    """Edge of the binary tree; ``origin`` is the original edge key, None for spacers."""

    length: int
    bound: int
    cost: int
    origin: EdgeKey | None = None

    @property
    def is_spacer(self) -> bool:
        return self.origin is None


SPACER = Link(0, 0, 1)


class BinaryTree:
    """
    Rooted binary version of a tree: every internal node has exactly two
    children. Auxiliary nodes (ids >= n) weigh 0 and hang off spacer links
    (length 0, bound 0, cost 1); relocated original edges keep their attributes.
    """

    def __init__(self, weights, original):
        self.weights = dict(weights)
        self.original = original
        self.neighbors = {v: {} for v in self.weights}
        self.root = None
        self.parent = {}
        self.children = {}
        self._next_id = original

    @classmethod
    def build(cls, instance: Instance, root: int) -> BinaryTree:
        btree = cls(enumerate(instance.weights), instance.n)
        for e in instance.edges:
            btree._connect(*e.endpoints, Link(e.length, e.bound, e.cost, e.key))
        btree._orient(root)
        for v in btree.postorder():
            if not btree.is_auxiliary(v):
                btree._fix(v)
        return btree

    def __repr__(self):
        return f"BinaryTree (root: {self.root}, nodes: {len(self.weights)}, auxiliary: {self.auxiliary_count})"

    @property
    def node_count(self) -> int:
        return len(self.weights)

    @property
    def auxiliary_count(self) -> int:
        return sum(1 for v in self.weights if v >= self.original)

    def is_auxiliary(self, node: int) -> bool:
        return node >= self.original

    def link(self, node: int) -> Link:
        """Link from node up to its parent."""
        return self.neighbors[node][self.parent[node]]

    @property
    def back_map(self) -> dict:
        """Child node -> original edge key of its parent link (None for spacers)."""
        return {v: self.link(v).origin for v in self.parent}

    def is_leaf(self, node: int) -> bool:
        return not self.children.get(node)

    def postorder(self) -> list:
        """Nodes with every child before its parent."""
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(self.children.get(v, ()))
        order.reverse()
        return order

    def _connect(self, a: int, b: int, link: Link) -> None:
        self.neighbors[a][b] = link
        self.neighbors[b][a] = link

    def _disconnect(self, a: int, b: int) -> None:
        del self.neighbors[a][b]
        del self.neighbors[b][a]

    def _new_node(self) -> int:
        node = self._next_id
        self._next_id += 1
        self.weights[node] = 0
        self.neighbors[node] = {}
        return node

    def _orient(self, root: int) -> None:
        self.root = root
        self.parent = {}
        self.children = {}
        queue = deque([root])
        seen = {root}
        while queue:
            v = queue.popleft()
            kids = sorted(u for u in self.neighbors[v] if u not in seen)
            self.children[v] = kids
            for u in kids:
                seen.add(u)
                self.parent[u] = v
                queue.append(u)

    def _is_spacer_leaf(self, node: int) -> bool:
        return self.is_auxiliary(node) and self.is_leaf(node) and self.link(node).is_spacer

    def _add_spacer_leaf(self, node: int) -> None:
        leaf = self._new_node()
        self._connect(node, leaf, SPACER)
        self.parent[leaf] = node
        self.children[leaf] = []
        self.children[node].append(leaf)

    def _remove_leaf(self, leaf: int) -> None:
        up = self.parent.pop(leaf)
        self._disconnect(up, leaf)
        self.children[up].remove(leaf)
        del self.children[leaf]
        del self.weights[leaf]
        del self.neighbors[leaf]

    def _split(self, node: int) -> None:
        """Keep the first child; chain the others through new auxiliaries a_2 .. a_{r-1}."""
        first, *rest = self.children[node]
        holder = node
        while len(rest) > 1:
            aux = self._new_node()
            self._connect(holder, aux, SPACER)
            self.parent[aux] = holder
            self.children[aux] = []
            child = rest.pop(0)
            link = self.neighbors[self.parent[child]][child]
            self._disconnect(self.parent[child], child)
            self._connect(aux, child, link)
            self.parent[child] = aux
            self.children[aux].append(child)
            if holder == node:
                self.children[node] = [first, aux]
            else:
                self.children[holder].append(aux)
            holder = aux
        last = rest[0]
        if self.parent[last] != holder:
            link = self.neighbors[self.parent[last]][last]
            self._disconnect(self.parent[last], last)
            self._connect(holder, last, link)
            self.parent[last] = holder
            self.children[holder].append(last)

    def _fix(self, node: int) -> None:
        """Restore exactly zero or two children at node."""
        kids = self.children[node]
        if len(kids) != 2:
            obsolete = [k for k in kids if self._is_spacer_leaf(k)]
            if obsolete:
                self._remove_leaf(obsolete[0])
                kids = self.children[node]
        if len(kids) == 1:
            self._add_spacer_leaf(node)
        elif len(kids) >= 3:
            self._split(node)

    def reroot(self, new_root: int) -> None:
        """
        Re-hang the tree at another original node. Only the old and the new
        root change their number of children, so at most two nodes are added.
        """
        if self.is_auxiliary(new_root) or new_root not in self.weights:
            raise ValueError(f"{new_root} is not an original node")
        old_root = self.root
        if new_root == old_root:
            return
        self._orient(new_root)
        self._fix(old_root)
        self._fix(new_root)
        LOGGER.debug("Re-rooted %d -> %d: %d nodes", old_root, new_root, self.node_count)


def to_binary(instance: Instance, root: int) -> BinaryTree:
    """Convert a tree rooted at root into its equivalent binary tree."""
    require_valid(instance)
    if classify(instance) == "general":
        raise NotATree("network is not a tree")
    return BinaryTree.build(instance, root)


class DPTable:
    """
    f(v, d, b): best covered weight in the subtree of v when v is at distance d
    from the facility and b budget units are spent below v. Stored densely
    for d in [0:R], b in [0:B]; d > R reads as 0.

    ``choices[v][d][b]`` is (budget to the left side, left delta, right delta).
    Ties go to the largest left share, then to the smallest delta.
    """

    def __init__(self, root, radius, budget):
        self.root = root
        self.radius = radius
        self.budget = budget
        self.values = {}
        self.choices = {}

    def value(self, node: int, d: int, b: int) -> int:
        if d > self.radius:
            return 0
        return self.values[node][d][b]

    @property
    def optimum(self) -> int:
        return self.value(self.root, 0, self.budget)


def _require_integer(instance: Instance) -> None:
    if not instance.integer_flag:
        raise NonIntegerInstance("tree solver needs integer parameters")


def _side_table(table: DPTable, child: int, link: Link):
    """
    g(d, x) = max over delta of f(child, d + length - delta, x - cost*delta):
    the best a child side yields with x budget units for its edge and subtree.
    """
    radius, budget = table.radius, table.budget
    best = [[0] * (budget + 1) for _ in range(radius + 1)]
    arg = [[0] * (budget + 1) for _ in range(radius + 1)]
    for d in range(radius + 1):
        for x in range(budget + 1):
            top = min(link.bound, x // link.cost)
            value, delta = -1, 0
            for dl in range(top + 1):
                cand = table.value(child, d + link.length - dl, x - link.cost * dl)
                if cand > value:
                    value, delta = cand, dl
            best[d][x] = value
            arg[d][x] = delta
    return best, arg


def dp_solve(btree: BinaryTree, instance: Instance) -> DPTable:
    """Fill f leaves-to-root for the current root of btree."""
    _require_integer(instance)
    radius, budget = instance.radius, instance.budget
    table = DPTable(btree.root, radius, budget)
    for v in btree.postorder():
        weight = btree.weights[v]
        if btree.is_leaf(v):
            table.values[v] = [[weight] * (budget + 1) for _ in range(radius + 1)]
            table.choices[v] = None
            continue
        left, right = btree.children[v]
        gl, al = _side_table(table, left, btree.link(left))
        gr, ar = _side_table(table, right, btree.link(right))
        values = [[0] * (budget + 1) for _ in range(radius + 1)]
        choices = [[None] * (budget + 1) for _ in range(radius + 1)]
        for d in range(radius + 1):
            for b in range(budget + 1):
                value, pick = -1, 0
                for x in range(b, -1, -1):
                    cand = gl[d][x] + gr[d][b - x]
                    if cand > value:
                        value, pick = cand, x
                values[d][b] = weight + value
                choices[d][b] = (pick, al[d][pick], ar[d][b - pick])
        table.values[v] = values
        table.choices[v] = choices
    LOGGER.debug("DP rooted at %d: f(root, 0, B) = %s", btree.root, table.optimum)
    return table


def reconstruct(table: DPTable, btree: BinaryTree) -> UpgradePlan:
    """Follow recorded choices from (root, 0, B); spacer links never carry an upgrade."""
    reductions = {}
    stack = [(btree.root, 0, table.budget)]
    while stack:
        v, d, b = stack.pop()
        if table.choices.get(v) is None:
            continue
        pick, dl, dr = table.choices[v][d][b]
        left, right = btree.children[v]
        for child, delta, share in ((left, dl, pick), (right, dr, b - pick)):
            link = btree.link(child)
            dist = d + link.length - delta
            if dist > table.radius:
                continue
            if delta and link.origin is not None:
                reductions[link.origin] = delta
            stack.append((child, dist, share - link.cost * delta))
    return UpgradePlan.of(reductions)


def solve_tree_1(instance: Instance, mode: str = INCREMENTAL) -> Solution:
    """
    Run the DP for every root and keep the best (lowest id on ties).

    ``incremental`` re-roots one binary tree in place; ``rebuild`` converts
    from scratch per root so that roots are independent of each other.
    """
    if mode not in (INCREMENTAL, REBUILD):
        raise ValueError(f"unknown mode '{mode}'")
    _require_integer(instance)
    if instance.facilities != 1:
        raise FacilityCountError("tree solver handles a single facility")
    best = None
    btree = None
    for root in instance.nodes:
        if btree is None or mode == REBUILD:
            btree = to_binary(instance, root)
        else:
            btree.reroot(root)
        table = dp_solve(btree, instance)
        if best is None or table.optimum > best[0]:
            best = (table.optimum, root, reconstruct(table, btree))
    value, root, plan = best
    solution = Solution.evaluate(instance, [root], plan)
    if solution.value != value:
        LOGGER.error("Root %d: DP value %s but plan covers %s", root, value, solution.value)
    LOGGER.info("Tree: facility %d, value %s", root, solution.value)
    return solution
