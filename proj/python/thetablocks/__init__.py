"""Character tables, p-blocks and theta-blocks of small finite groups.

Groups are given as built-in names ("auto:S4"), or as dicts with "name" and
either "permutations" (0-indexed image lists) or "cayley". Results are plain
dicts in the same JSON layout the command-line tool emits.
"""

import json

from . import _thetablocks
from ._thetablocks import DEFAULT_SEED, Error, builtin_groups

__all__ = [
    "DEFAULT_SEED",
    "Error",
    "blocks",
    "brauer_table",
    "builtin_groups",
    "character_table",
    "decomposition",
    "theta_blocks",
    "verify",
]


def _spec(x):
    return json.dumps(x)


def character_table(group):
    return json.loads(_thetablocks.character_table(_spec(group)))


def blocks(group, p, ideal_choice=(0, 0)):
    return json.loads(_thetablocks.blocks(_spec(group), p, *ideal_choice))


def brauer_table(group, p, seed=DEFAULT_SEED):
    return json.loads(_thetablocks.brauer_table(_spec(group), p, seed))


def decomposition(group, p, seed=DEFAULT_SEED):
    return json.loads(_thetablocks.decomposition(_spec(group), p, seed))


def theta_blocks(group, normal, theta, p):
    """normal is "auto:<name>" or a list of elements of the group."""
    return json.loads(_thetablocks.theta_blocks(_spec(group), _spec(normal), theta, p))


def verify(corpus, checks=(), seed=DEFAULT_SEED):
    """Run the checks over a list of triple dicts; returns outcomes and a summary."""
    return json.loads(_thetablocks.verify(_spec(list(corpus)), list(checks), seed))
