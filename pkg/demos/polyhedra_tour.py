"""Polyhedra tour: pairs of solids assembled from identical face sets.

A polyhedron is not determined by the multiset of its faces: the same
faces can close up into non-congruent solids, sometimes with different
volumes.
"""

from convexkit.polyhedra import (
    build_cube_with_pyramids,
    build_decagonal_dipyramidal_antiprism,
    build_icosagonal_dipyramid,
    build_pseudorhombicuboctahedron,
    build_rhombicuboctahedron,
    compare_report,
)


def show(rep):
    for e in rep["meshes"]:
        print(f"  {e['name']}: V={e['vertices']} E={e['edges']} F={e['faces']}, "
              f"faces by side count {e['faces_by_side_count']}, "
              f"volume {e['volume']:.9f}, convex {e['convex']}")
    print(f"  same face multiset: {rep['multiset_classes']}")
    print(f"  congruence classes: {rep['congruence_classes']}")


print("== cube with two pyramids: opposite vs adjacent faces ==")
rep = compare_report(
    [build_cube_with_pyramids(), build_cube_with_pyramids(mode="adjacent")],
    names=["opposite", "adjacent"],
)
show(rep)
print("  same 12 faces, same volume, different solids")

print()
print("== rhombicuboctahedron vs its twisted-cap impostor ==")
rep = compare_report(
    [build_rhombicuboctahedron(), build_pseudorhombicuboctahedron()],
    names=["rco", "pseudo-rco"],
)
show(rep)
print("  rotating one square cupola by 45 degrees preserves faces and volume")

print()
print("== forty identical triangles, two very different volumes ==")
rep = compare_report(
    [build_icosagonal_dipyramid(), build_decagonal_dipyramidal_antiprism()],
    names=["dipyramid", "antiprism"],
)
show(rep)
v1 = rep["meshes"][0]["volume"]
v2 = rep["meshes"][1]["volume"]
print(f"  volume gap: {abs(v1 - v2) / max(v1, v2):.1%}")
