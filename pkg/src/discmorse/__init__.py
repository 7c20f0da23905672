"""Discrete Morse matchings, critical-cell complexes, and exact homology.

The package is organized bottom-up:

- complexes, chains: simplicial complexes, incidence signs, boundary
  matrices, barycentric subdivision, staircase products.
- matchings: Hasse diagrams, (Morse) matchings, collapses, greedy and
  randomized matching search.
- morse: V-paths, their signed multiplicities, and the chain complex on
  critical cells.
- elimination: unit-pivot Gaussian elimination of matched pairs and the
  equivalence with Morse matchings.
- homology: integer Smith normal form with transforms, Betti numbers,
  torsion, and cycle classification.
- euler: complete matchings, Euler chains, rerouting, homologous tests.
- io, corpus, cli: text formats, bundled examples, command line.
"""

from .chains import ChainComplex, boundary_matrix, chain_complex
from .complexes import (
    Cell,
    SimplicialComplex,
    Subdivision,
    as_cell,
    barycentric_subdivision,
    incidence,
    product_triangulation,
)
from .elimination import (
    EliminationError,
    EliminationStep,
    all_orders_agree,
    eliminate_sequence,
    gaussian_eliminate,
    morse_iff_all_orders,
)
from .errors import DiscMorseError, MatchingError, NotMorseError, ParseError
from .euler import (
    EulerChain,
    boundary_zero_chain,
    complete_matching,
    cone_rewire,
    euler_chain_from_matching,
    homologous,
    reroute_along_vpath,
)
from .homology import (
    CycleClass,
    HomologySummary,
    SmithNormalForm,
    cycle_class,
    homology,
    smith_normal_form,
)
from .matchings import (
    HasseDiagram,
    Matching,
    critical_cells,
    find_closed_vpath,
    find_collapse,
    greedy_morse_matching,
    has_closed_vpath_bruteforce,
    hasse,
    is_morse,
    random_matching,
    random_morse_matching,
    remove_edge,
    validate_matching,
)
from .morse import (
    MorseComplex,
    VPath,
    differential_entry,
    multiplicity,
    path_counts_signed,
    reorient,
    thom_smale_complex,
    vpaths,
)

__version__ = "0.1.0"
