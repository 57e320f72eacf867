"""Trading hub placement on a weighted transport network.

Pipeline: validate a scenario, compute all-pairs shortest paths for the three
cost classes, price every candidate location through its cheapest supply
chain, simulate buyer hub choice for every placement profile, and pick the
compromise (lexicographic min-max regret) profile.
"""

from .compromise import TIED, CompromiseResult, compromise_select, perfect_vector, residual_matrix, solve_compromise
from .errors import (
    Issue,
    IssueCode,
    MissingMargin,
    NegativeCycle,
    NoFeasibleChain,
    UnreachableLeg,
    ValidationError,
)
from .market import BuyerAssignment, PayoffMatrix, Profile, build_payoff_matrix, buyer_choice, enumerate_profiles
from .money import Money
from .network import (
    UNREACHABLE,
    CostClass,
    CostMatrix,
    Edge,
    Network,
    all_pairs_shortest_paths,
    build_weight_matrix,
    shortest_path_matrix,
)
from .pipeline import Solution, solve
from .scenario import FractionOfBase, PerLocation, Scenario, ScenarioFileError, example_scenario_path, validate
from .supply import SupplyPlan, amortized_leg_cost, build_supply_plan, unit_price

__version__ = "0.1.0"

__all__ = [
    "TIED",
    "CompromiseResult",
    "compromise_select",
    "perfect_vector",
    "residual_matrix",
    "solve_compromise",
    "Issue",
    "IssueCode",
    "MissingMargin",
    "NegativeCycle",
    "NoFeasibleChain",
    "UnreachableLeg",
    "ValidationError",
    "BuyerAssignment",
    "PayoffMatrix",
    "Profile",
    "build_payoff_matrix",
    "buyer_choice",
    "enumerate_profiles",
    "Money",
    "UNREACHABLE",
    "CostClass",
    "CostMatrix",
    "Edge",
    "Network",
    "all_pairs_shortest_paths",
    "build_weight_matrix",
    "shortest_path_matrix",
    "Solution",
    "solve",
    "FractionOfBase",
    "PerLocation",
    "Scenario",
    "ScenarioFileError",
    "example_scenario_path",
    "validate",
    "SupplyPlan",
    "amortized_leg_cost",
    "build_supply_plan",
    "unit_price",
]
