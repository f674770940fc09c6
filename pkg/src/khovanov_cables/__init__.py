"""Khovanov-type link homology with cabling and band-move tooling.

Subpackage map:

- chain_algebra: mod-p linear algebra, sparse bigraded complexes,
  Gaussian simplification, filtration levels
- braids, diagrams, planar: braid words, planar link diagrams, embedding data
- frobenius, cube: the deformed Frobenius algebra and the naive state-sum
  complex (small-diagram oracle)
- scanning: the divide-and-conquer engine used at production sizes
- lee: canonical deformed cycles and the s-invariant
- cobordism: band attachments, induced maps, skein triangles
- induction: satellite families, renormalized gradings, the induction harness
- cli, cli_io: manifest-driven command line front end with caching
"""

__version__ = "0.1.0"
