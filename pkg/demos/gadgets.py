"""The building blocks of the hardness construction, each checked by exact search.

Run: python3 demos/gadgets.py
"""

from __future__ import annotations

from edgepart import Status, decide_k, enumerate_valid
from edgepart.gadgets import blob, clause_gadget, variable_gadget


def main() -> None:
    bl = blob()
    g, s = bl.graph, bl.labels["s"]
    print(f"blob: {g.n} vertices, {len(g.crossings)} links")
    for caps, what in (({s: 0}, "no red edge at s"), ({}, "no restriction"), ({s: 1}, "exactly one red edge at s")):
        res = decide_k(g, 2, caps)
        print(f"  degree-2 partition with {what}: {res.status.value} ({res.nodes_explored} nodes)")

    vg = variable_gadget(2)
    print(f"variable gadget (m=2): {len(vg.graph.crossings)} crossing pairs, caps of 1 on {len(vg.caps)} vertices")
    for col in enumerate_valid(vg.graph, 2, vg.caps):
        var = {col[e].value for e in vg.roles["variable"]}
        neg = {col[e].value for e in vg.roles["negated"]}
        print(f"  variable edges {var.pop()}, negated edges {neg.pop()}")

    cg = clause_gadget()
    w = [cg.labels[f"w{i}"] for i in (1, 2, 3)]
    all_blocked = decide_k(cg.graph, 2, {x: 0 for x in w}).status
    one_open = decide_k(cg.graph, 2, {x: 0 for x in w[1:]}).status
    print(f"clause gadget: every true edge blocked -> {all_blocked.value}; one true edge free -> {one_open.value}")
    assert all_blocked is Status.UNSAT and one_open is Status.SAT


if __name__ == "__main__":
    main()
