from .acceptance import AcceptanceRunner, verify_all
from .theorem_b import TheoremBHarness, theorem_b_harness, weight_module

__all__ = ["AcceptanceRunner", "verify_all", "TheoremBHarness", "theorem_b_harness", "weight_module"]
