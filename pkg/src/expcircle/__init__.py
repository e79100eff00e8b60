"""Finite subset spaces of the circle, modelled through hyperbolic geometry.

The package studies the space of non-empty subsets of the circle with at most
three elements.  Subsets of a given size are put in normal form by Moebius
maps of the upper half-plane, which yields explicit chart coordinates; the
whole space is modelled simplicially for integer homology; and the
fundamental-group computations behind its identification with the 3-sphere
(and of the singleton circle inside it with the trefoil knot) are reproduced
as machine-checkable certificates.

Modules
-------
moebius    PSL(2, R) arithmetic, boundary action, frame map.
config     Finite subsets of the circle: charts, coalescence, loops, windings.
complexes  Simplicial models and Smith-normal-form integer homology.
groups     Finitely presented groups: pushouts, Tietze moves, coset tables.
cli        Command-line interface over all of the above.
"""

from . import complexes, config, groups, moebius

__all__ = ["moebius", "config", "complexes", "groups", "cli"]
__version__ = "0.1.0"
