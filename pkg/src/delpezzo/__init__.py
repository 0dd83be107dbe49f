"""Exact-arithmetic classification of Gorenstein quotients of the plane.

Modules:
  cyclotomic    exact arithmetic in Q(zeta_m) and roots of unity
  lattice       ADE Dynkin types, dual-graph recognition, blow-down calculus
  fpgroups      coset enumeration, Smith normal form, abelianization
  plane_action  monomial group actions on P^2 and quotient profiles
  surfaces      weighted hypersurfaces, germ and fibre bookkeeping
  classifier    cover filters, quotient enumeration, the final report
  cli           JSON command-line front end
"""

__version__ = "0.1.0"
