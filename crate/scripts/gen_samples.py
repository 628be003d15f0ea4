"""Regenerate the shipped triangulation samples (requires `pip install regina`)."""
import json
import sys
from pathlib import Path

import regina
from regina import Example3, ExampleLink, Triangulation3


def to_doc(tri):
    gluings = []
    for i in range(tri.size()):
        tet = tri.tetrahedron(i)
        for f in range(4):
            adj = tet.adjacentTetrahedron(f)
            if adj is None:
                continue
            j = adj.index()
            perm = tet.adjacentGluing(f)
            g = perm[f]
            if (j, g) < (i, f):
                continue
            src = [v for v in range(4) if v != f]
            dst = [v for v in range(4) if v != g]
            gluings.append([i, f, j, g, [dst.index(perm[v]) for v in src]])
    return {"tets": tri.size(), "gluings": gluings}


def trefoil_complement():
    tri = ExampleLink.trefoil().complement()
    tri.idealToFinite()
    tri.simplify()
    return tri


def main(out):
    out = Path(out)
    samples = {
        "ball.json": Example3.ball() if Example3.ball().size() == 1 else None,
        "solid_torus.json": Example3.lst(1, 2),
        "closed_example.json": Example3.lens(4, 1),
        "trefoil_complement.json": trefoil_complement(),
    }
    for name, tri in samples.items():
        if tri is None:
            tri = Triangulation3()
            tri.newTetrahedron()
        (out / name).write_text(json.dumps(to_doc(tri)) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "samples")
