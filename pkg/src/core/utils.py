import random


def to_camel(s: str) -> str:
    parts = s.split('_')
    return parts[0] + ''.join(word.capitalize() for word in parts[1:])


def normalize(literal: str) -> str:
    """
    Collapses runs of whitespace in a literal to single spaces and strips
    both ends, so positions reported by the parser refer to the text the
    user actually sees in the error message.
    """
    return " ".join(literal.strip().split())


def trial_rng(seed: int, index: int) -> random.Random:
    """
    Independent generator for trial `index` of a run seeded with `seed`.

    String seeds are hashed with SHA-512 by `random`, so the stream does not
    depend on PYTHONHASHSEED, on the process that runs the trial or on the
    order in which trials are scheduled.
    """
    return random.Random(f"{seed}:{index}")
