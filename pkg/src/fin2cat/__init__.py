"""fin2cat: a toolkit for finite 2-category computations.

Modules:
  fincat     finite categories, functors, natural transformations, pasting
  freegen    graphs, path categories, computads, pasting words
  deltadiag  truncated (co)simplicial shape diagrams and dot extensions
  descent    lax descent and descent categories of a diagram
  laxalg     2-monads from monoid actions, lax algebras and their morphisms
  codescent  presented categories, quotients, codescent objects, Kleisli
  cli        workspace files and the fin2cat command line tool
"""

__version__ = "0.1.0"
