#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
from exceptions import InputError

# Subsets are stored as integer bit masks over at most this many elements
MAX_ELEMENTS = 64

# Upper bound on the number of order ideals enumerated for one poset
MAX_IDEALS = 2 ** 24

# Upper bound on the number of ideal chains listed by enumerate_chains
MAX_CHAINS = 2 ** 22

# Factorial growth guard for linear extensions and natural labelings
MAX_LINEAR_EXTENSION_ELEMENTS = 12

# Default number of DFS nodes an oracle may visit
DEFAULT_NODE_BUDGET = 10 ** 8

# Environment variable overriding the oracle node budget
NODE_BUDGET_VARIABLE = "MARKED_ORDER_NODE_BUDGET"


def node_budget():
    """
    Get the node budget of the brute-force oracles, either from the
    environment variable MARKED_ORDER_NODE_BUDGET or the default value.

    Returns
    -------
    budget : integer
        The maximum number of search nodes an oracle may visit.

    """
    value = os.environ.get(NODE_BUDGET_VARIABLE)

    # Nothing set, use the default
    if value is None or value.strip() == "":
        return DEFAULT_NODE_BUDGET

    try:
        budget = int(value)
    except ValueError:
        raise InputError(f"{NODE_BUDGET_VARIABLE} must be an integer, got '{value}'.")

    if budget <= 0:
        raise InputError(f"{NODE_BUDGET_VARIABLE} must be positive, got {budget}.")

    return budget
