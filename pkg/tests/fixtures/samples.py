"""Sample name tables and SSA file contents for testing."""

import numpy as np

from name_game.population.table import NameTable, new_table

TWO_NAMES = [("A", 0.6), ("B", 0.4)]

THREE_NAMES = [("A", 0.5), ("B", 0.3), ("C", 0.2)]

SSA_SAMPLE = """Isabella,F,22913
Sophia,F,20643
Emma,F,17345
Olivia,F,17028
Ava,F,15433
Jacob,M,22139
Ethan,M,18008
Michael,M,17366
Jayden,M,17192
William,M,17060
Avery,F,7200
Avery,M,1500
"""

MALFORMED_SSA = """Isabella,F,22913
Sophia,F
Emma,X,17345
Olivia,F,many
Ava,F,15433
"""

FIFTY_NAMES = [
    "Ada", "Alma", "Amos", "Anna", "Ava", "Bea", "Ben", "Cara", "Cleo", "Dale",
    "Dora", "Eli", "Ella", "Emil", "Enzo", "Eva", "Finn", "Gus", "Hana", "Ida",
    "Ira", "Ivy", "Jack", "Jade", "Joel", "June", "Kai", "Kat", "Lea", "Leo",
    "Liam", "Lila", "Luca", "Mae", "Max", "Mia", "Nia", "Noah", "Nora", "Otto",
    "Paul", "Rex", "Rosa", "Ruth", "Sam", "Tess", "Theo", "Uma", "Vera", "Zoe",
]  # fmt: skip


def random_unique_table(rng: np.random.Generator, n: int) -> NameTable:
    """Table over ``n`` names with random, pairwise distinct positive frequencies."""
    while True:
        weights = rng.random(n) + 1e-3
        freqs = weights / weights.sum()
        if len(set(freqs.tolist())) == n:
            return new_table((f"n{i:03d}", float(f)) for i, f in enumerate(freqs))
