# Copyright 2026 The nu-workbench Authors.
# SPDX-License-Identifier: Apache-2.0
"""Evaluate and compare programs that allocate fresh names."""

import json

from . import _nu
from ._nu import NuError, pretty, typecheck

__all__ = [
    "NuError",
    "check_equivalence",
    "corpus",
    "eval_abstract",
    "eval_concrete",
    "pretty",
    "typecheck",
]


def eval_concrete(text, supply=0, fuel=1000):
    """Run a closed term from the given name supply. Returns a dict."""
    return json.loads(_nu.eval_concrete(text, supply, fuel))


def eval_abstract(text, world=(), fuel=1000):
    """Run a closed term at a world (an iterable of names). Returns a dict."""
    return json.loads(_nu.eval_abstract(text, sorted(world), fuel))


def check_equivalence(lhs, rhs, type, method="direct", depth=4, fuel=1000, ext=2, budget=256):
    """Compare two closed terms; the verdict and any certificate as a dict."""
    return json.loads(_nu.check_equivalence(lhs, rhs, type, method, depth, fuel, ext, budget))


def corpus(seed=1, count=10, depth=4):
    """Generated closed terms as (source, type) pairs."""
    return _nu.corpus(seed, count, depth)
