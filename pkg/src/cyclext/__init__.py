"""Extendable cyclic actions on closed surfaces: decisions, atlases and lens-space certificates."""
from .arith import (CyclicElem, align_automorphism, bezout, crt_pair, egcd, elem_order,
                    inverse_mod, is_unit, totient, units)
from .conjugacy import (GeneratorUnit, count_generator_classes, criterion_units,
                        generators_conjugate, orbit_conjugate, readings_disagree,
                        subgroups_conjugate)
from .errors import *  # noqa: F401,F403
from .extendability import (EmbeddingRecipe, ExtendabilityVerdict, StandardFormClass,
                            canonical_class, check_extendable, embedding_recipe,
                            enumerate_atlas, inverse_pairing, standard_epimorphism)
from .lens import (DominationCertificate, LensSpace, domination_digraph, dominates_qr,
                   lens_equivalent, verify_certificate)
from .moves import (HandleSlide, SlidePointAlpha, SlidePointBeta, SwapPoints, TwistAlpha,
                    TwistBeta, apply_move, apply_script, applicable_moves, inverse, normalize)
from .orbifold import (EpimorphismSpec, OrbifoldSignature, ValidationReport, action_from_json,
                       action_to_json, graph_beta1, quotient_genus, validate)

__version__ = "0.1.0"
