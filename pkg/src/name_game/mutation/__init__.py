"""Novel names by penalized edit distance from established names."""

from name_game.mutation.edit_distance import levenshtein, single_edits
from name_game.mutation.objective import (
    CandidatePool,
    choose_mutated_name,
    generate_candidates,
    lambda_grid,
    mutation_cost,
    sweep_lambda,
)

__all__ = [
    "CandidatePool",
    "choose_mutated_name",
    "generate_candidates",
    "lambda_grid",
    "levenshtein",
    "mutation_cost",
    "single_edits",
    "sweep_lambda",
]
