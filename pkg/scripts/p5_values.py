"""p_5(n) at small n.  No closed form covers this range, so these are new data."""

import argparse

from pathdeg.constructions import certificate
from pathdeg.search import p_canonical

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--nmax", type=int, default=10)
args = ap.parse_args()

print("n,p5,certificate,witnesses,seconds")
for n in range(6, args.nmax + 1):
    rec = p_canonical(n, 5)
    print(f"{n},{rec.p},{certificate(5, n).edges},{rec.witness_count},{rec.elapsed:.1f}", flush=True)
