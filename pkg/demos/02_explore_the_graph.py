"""Walkthrough: the cross-reference graph and search table as library calls.

Run from the repository root:

    python3 demos/02_explore_the_graph.py
"""

from pathlib import Path

from symdoc import (
    SynthesisSpec,
    build_graph,
    build_search_table,
    graph_stats,
    query,
    referrers_of,
    scan_corpus,
    synthesize_corpus,
)

corpus = Path(__file__).parent / "out" / "corpus2"
synthesize_corpus(
    SynthesisSpec(
        articles=6, symbols_total=40, edge_density=0.5,
        external_fraction=0.15, seed=7,
    ),
    corpus,
)

print("1. Scanning the corpus ...")
scan = scan_corpus(corpus)
print(f"   {len(scan.documents)} articles, "
      f"{sum(len(d.definitions) for d in scan.documents)} definitions, "
      f"{sum(len(d.links) for d in scan.documents)} link occurrences")

print("2. Building the graph ...")
graph = build_graph(scan.documents)
stats = graph_stats(graph)
print(f"   {stats.total_symbols} symbols, {stats.internal_edges} internal "
      f"edges, {stats.external_refs} external refs")
print(f"   busiest symbol has {stats.max_referrers} referrers; "
      f"link occurrences split as {graph.tally}")

print("3. Referrer lists are the inverse of definition references:")
popular = max(graph.symbols, key=lambda sid: len(graph.referrers[sid]))
record = graph.symbols[popular]
print(f"   {record.name} ({popular}) is referenced by:")
for ref_id in referrers_of(graph, popular):
    ref = graph.symbols[ref_id]
    print(f"     - {ref.name}  [{ref.article}]")

print("4. The search table answers multi-word AND queries:")
table = build_search_table(graph)
for raw in ("set", "se t", "zz_no_such"):
    hits = query(table, raw)
    shown = ", ".join(e.display_name for e in hits[:5]) or "(nothing)"
    print(f"   {raw!r:12} -> {len(hits):3d} matches: {shown}")
