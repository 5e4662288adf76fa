"""Walkthrough: what the parser tolerates and what it reports.

Run from the repository root:

    python3 demos/03_tolerant_parsing.py
"""

from symdoc import parse_article

DAMAGED = b"""\
<html><body>
<p class="broken <a id="F1" data-sym-kind="func" data-sym-name="survives">ok</a>
<div class="def">
<a id="F2" data-sym-kind="pred" data-sym-name="never_closed">x</a>
<p>This definition's div is never closed.
<a href="#F1">a relative link</a>
<a href="mailto:nobody@example.com">not a symbol link</a>
<a id="F2" data-sym-kind="attr" data-sym-name="duplicate">dup</a>
"""

doc = parse_article("demo", DAMAGED)

print("Definitions extracted despite the damage:")
for site in doc.definitions:
    print(f"  {site.anchor.canonical:10} {site.kind.value:6} {site.name}")

print("\nLink occurrences (relative hrefs resolve to this article):")
for link in doc.links:
    owner = link.enclosing_definition
    print(f"  -> {link.target.canonical:10} "
          f"inside {owner.canonical if owner else '(no definition)'}")

print("\nEvery problem became a warning, never a failure:")
for warning in doc.warnings:
    print(f"  [{warning.code}] {warning.message}")
