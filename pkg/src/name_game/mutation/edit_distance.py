"""Levenshtein edit distance and single-edit neighbourhoods of names."""


def levenshtein(a: str, b: str) -> int:
    """Minimal insertions, deletions and substitutions turning ``a`` into ``b``.

    Case-sensitive. Uses two rolling rows of the dynamic-programming table.
    """
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)

    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]


def single_edits(word: str, alphabet: str, initial_alphabet: str | None = None) -> set[str]:
    """Every non-empty string one deletion, substitution or insertion away from ``word``.

    ``initial_alphabet`` replaces ``alphabet`` for characters placed at position 0.
    """
    first = initial_alphabet if initial_alphabet is not None else alphabet
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = {left + right[1:] for left, right in splits if right}
    substitutes = {
        left + c + right[1:]
        for left, right in splits
        if right
        for c in (first if not left else alphabet)
        if c != right[0]
    }
    inserts = {
        left + c + right for left, right in splits for c in (first if not left else alphabet)
    }
    return (deletes | substitutes | inserts) - {""}
