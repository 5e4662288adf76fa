"""Walkthrough: synthesize a small corpus and build the reference site.

Run from the repository root:

    python3 demos/01_build_a_site.py

Everything lands under demos/out/. Open demos/out/site/index.html through a
static file server (see README) to use the search pane.
"""

from pathlib import Path

from symdoc import SynthesisSpec, synthesize_corpus
from symdoc.cli import BuildConfig, run_build

out = Path(__file__).parent / "out"
corpus = out / "corpus"
site = out / "site"

print("1. Synthesizing a 12-article corpus with 80 symbols ...")
spec = SynthesisSpec(
    articles=12,
    symbols_total=80,
    edge_density=0.35,
    external_fraction=0.2,
    seed=2024,
)
truth = synthesize_corpus(spec, corpus)
print(f"   wrote {spec.articles} files; ground truth says "
      f"{truth['counts']['internal_edges']} internal edges and "
      f"{truth['counts']['external_refs']} external references")

print("2. Building the site ...")
code, manifest_path = run_build(
    BuildConfig(input_dir=corpus, output_dir=site, jobs=2)
)
assert code == 0

print(f"3. Done. The build manifest is {manifest_path}.")
print(f"   Serve the site with:  python3 -m http.server -d {site} 8000")
print("   then open http://localhost:8000/ and type into the search box.")
