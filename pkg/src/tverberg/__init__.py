"""Exact-arithmetic Tukey depth regions and Tverberg partitions in the plane."""

from .constructive import (CaseReport, ProofTrace, Provenance,
                           SectorDecomposition, birch_first, birch_second,
                           case4_partitions, classify_case,
                           find_covering_halfplanes, order_around,
                           prove_sierksma, vertex_partition)
from .depth import (C3Report, DepthRegion, check_c3_dichotomy, depth_region,
                    tukey_depth)
from .errors import (CollinearError, ExhaustionError, LemmaViolation,
                     NoCoverError, NotCase4, NotGeneralPosition, OverlapError,
                     ParseError, PreconditionError, ShapeError,
                     StructureError, TverbergError)
from .generalized import (MAX_R, GeneralSectorDecomposition, case4_general,
                          sector_decomposition, validate_general_partition)
from .geometry import (ConvexRegion, HalfPlane, Membership, Point, PointSet,
                       RegionKind, clip_region, convex_hull,
                       intersect_regions, is_general_position, orient,
                       rational, region_contains, segment_common_point)
from .instances import (GenSpec, SplitMix64, gen_case4, gen_extremal_clusters,
                        gen_random, minimize_count, perturb)
from .oracle import (Partition, Shape, Witness, candidate_partitions,
                     count_by_shape, enumerate_all, is_tverberg,
                     offshape_partitions, shape_specific_witness)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
