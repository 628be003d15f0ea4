"""Compute reference normal surface data for the shipped samples with Regina.

The output is used as an independent check of enumeration and surface
reconstruction. Requires `pip install regina`.
"""
import json
import sys
from pathlib import Path

import regina
from regina import NormalCoords, NormalList, NormalSurfaces, Perm4, Triangulation3


def from_doc(doc):
    tri = Triangulation3()
    tets = [tri.newTetrahedron() for _ in range(doc["tets"])]
    for i, f, j, g, m in doc["gluings"]:
        if tets[i].adjacentTetrahedron(f) is not None:
            continue
        src = [v for v in range(4) if v != f]
        dst = [v for v in range(4) if v != g]
        images = [0] * 4
        images[f] = g
        for k, v in enumerate(src):
            images[v] = dst[m[k]]
        tets[i].join(f, tets[j], Perm4(*images))
    return tri


def vec(s, n):
    return [
        int(x.longValue())
        for t in range(n)
        for x in [s.triangles(t, v) for v in range(4)] + [s.quads(t, q) for q in range(3)]
    ]


def describe(s, n):
    disk = s.isConnected() and s.eulerChar() == 1 and s.hasRealBoundary()
    return {
        "vector": vec(s, n),
        "euler": int(s.eulerChar().longValue()),
        "weight": sum(int(s.edgeWeight(e).longValue()) for e in range(s.triangulation().countEdges())),
        "orientable": bool(s.isOrientable()),
        "components": len(s.components()),
        "boundary_curves": int(s.countBoundaries()),
        "compressing_disc": bool(disk and s.isCompressingDisc(True)),
        "vertex_link": bool(s.isVertexLinking()),
    }


def enumerate_list(tri, which):
    ns = NormalSurfaces(tri, NormalCoords.Standard, which)
    n = tri.size()
    return sorted((describe(s, n) for s in ns), key=lambda d: d["vector"])


def main(samples):
    samples = Path(samples)
    for name in ["ball", "solid_torus", "closed_example", "trefoil_complement"]:
        doc = json.loads((samples / f"{name}.json").read_text())
        tri = from_doc(doc)
        ref = {
            "admissible_vertex": enumerate_list(tri, NormalList.Vertex),
            "admissible_fundamental": enumerate_list(tri, NormalList.Fundamental),
            "full_vertex": [d["vector"] for d in enumerate_list(tri, NormalList.Vertex | NormalList.ImmersedSingular)],
            "full_fundamental": [
                d["vector"] for d in enumerate_list(tri, NormalList.Fundamental | NormalList.ImmersedSingular)
            ],
        }
        (samples / "reference" / f"{name}.json").write_text(json.dumps(ref) + "\n")
        print(name, {k: len(v) for k, v in ref.items()})


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "samples")
