"""Certified re-derivation of the finite computations behind Margulis-number bounds.

Subpackages:

- ``rigor``: outward-rounded interval arithmetic and the decimal-literal
  convention used by every approximate computation here.
- ``numfield``: exact arithmetic on low-degree algebraic integers (unit
  tests via norms, the nifty/swell classification, certified cubic roots,
  Pell pairs and the candidate-family survivor scan).
- ``sl2fq``: small finite fields and exhaustive SL2/PSL2 verification.
- ``hypgeom``: hyperbolic trigonometry of displacements over intervals.
- ``sphere``: distance-sum bounds for points on the unit 2-sphere.
- ``claims`` / ``report`` / ``cli``: the claim registry, the precision-
  escalating runner with JSON/markdown reports, and the command line.
"""

__version__ = "0.1.0"
