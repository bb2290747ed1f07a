#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
import sys
import time
import numpy as np
import pandas as pd
from tqdm import tqdm
from exceptions import InputError, VerificationFailure
from families import family_marked, random_flags, random_gt_spec, random_ps_spec, tableau_count
from marked import (MarkedPoset, count_bruteforce, decompose_point, dilate_marking,
                    ehrhart_polynomial, enumerate_points, evaluate_marked, in_order_cone,
                    natural_labeling_for, product_formula_polynomial, reconstruct_point)
from order_poly import count_maps_bruteforce, omega, omega_via_descents
from poset import from_covers, induced_subposet, maximal_elements, minimal_elements, topological_order
from polynomial import UniPoly

logger = logging.getLogger(__name__)

KINDS = ("random", "ps", "gt", "flagged", "bijection", "omega")


def random_poset(rng, max_elements=8, edge_probability=0.4):
    """Random poset from covers i -> j with i < j, kept with the given probability."""
    n = int(rng.integers(1, max_elements + 1))
    covers = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_probability]
    return from_covers([f"p{i}" for i in range(n)], covers)


def random_marked_poset(rng, max_elements=8, max_marked=4, max_mark=5, distinct=False):
    """
    Random marked poset with an order preserving marking. Minimal and
    maximal elements are always marked, a few random extra elements may be.
    Posets with more than max_marked forced marks are drawn again.

    Parameters
    ----------
    rng : numpy.random.Generator
        The random generator.
    max_elements : integer
        Largest poset size. The default is 8.
    max_marked : integer
        Largest number of marked elements. The default is 4.
    max_mark : integer
        Marks are drawn from [0, max_mark]. The default is 5.
    distinct : boolean
        Draw pairwise distinct marks, so all gaps are positive. The default
        is False.

    Returns
    -------
    M : MarkedPoset
        The marked poset.

    """
    if distinct and max_marked > max_mark + 1:
        raise InputError(f"Cannot draw {max_marked} distinct marks from [0, {max_mark}].")

    while True:
        P = random_poset(rng, max_elements)
        forced = set(minimal_elements(P)) | set(maximal_elements(P))
        if len(forced) <= max_marked:
            break

    # Top up with random extra marked elements
    marked = set(forced)
    extra = [p for p in range(P.n) if p not in marked]
    rng.shuffle(extra)
    marked.update(extra[:int(rng.integers(0, max_marked - len(marked) + 1))])

    # Sorted values along a linear extension of A are order preserving
    A = induced_subposet(P, sum(1 << a for a in marked))
    if distinct:
        values = sorted(int(v) for v in rng.choice(max_mark + 1, size=A.n, replace=False))
    else:
        values = sorted(int(v) for v in rng.integers(0, max_mark + 1, size=A.n))
    marks = {A.parent[q]: value for q, value in zip(topological_order(A), values)}

    return MarkedPoset(P, marks)


def formula_count(M):
    """Product formula count; markings outside the order cone have no points."""
    if not in_order_cone(M):
        return 0
    L = natural_labeling_for(M)
    return evaluate_marked(M, L, product_formula_polynomial(M, L))


def _describe(M):
    P = M.poset
    marks = ",".join(f"{P.labels[a]}={value}" for a, value in M.marks.items())
    return f"|P|={P.n} covers={list(P.covers)} marks={marks}"


def _trial_random(rng):
    M = random_marked_poset(rng)
    formula, oracle = formula_count(M), count_bruteforce(M)
    return {"instance": _describe(M), "formula": formula, "oracle": oracle, "match": formula == oracle}


def _family_trial(spec, flags=None):
    M = family_marked(spec, flags)
    formula, bruteforce = formula_count(M), count_bruteforce(M)
    oracle = tableau_count(spec, flags)
    instance = str(spec) if flags is None else f"{spec} {flags}"
    return {"instance": instance, "formula": formula, "oracle": oracle,
            "bruteforce": bruteforce, "match": formula == oracle == bruteforce}


def _trial_ps(rng):
    return _family_trial(random_ps_spec(rng))


def _trial_gt(rng):
    return _family_trial(random_gt_spec(rng))


def _trial_flagged(rng):
    spec = random_gt_spec(rng)
    return _family_trial(spec, random_flags(rng, spec.k, spec.m))


def _trial_bijection(rng):
    M = random_marked_poset(rng, max_elements=6, distinct=True)
    L = natural_labeling_for(M)
    points = enumerate_points(M)

    # Every point comes back and no two points share a decomposition
    keys = set()
    round_trip = True
    for point in points:
        chain, maps = decompose_point(M, L, point)
        round_trip &= reconstruct_point(M, L, chain, maps) == point
        keys.add((chain.ideals, tuple(tuple(sorted(m.items())) for m in maps)))

    return {"instance": _describe(M), "formula": len(keys), "oracle": len(points),
            "match": round_trip and len(keys) == len(points)}


def _trial_omega(rng):
    P = random_poset(rng, max_elements=6)
    p = omega(P)
    q = omega_via_descents(P, topological_order(P))
    agrees = all(p(n) == count_maps_bruteforce(P, n) for n in range(1, 4))
    return {"instance": f"|P|={P.n} covers={list(P.covers)}", "formula": p.to_text(),
            "oracle": q.to_text(), "match": p == q and agrees}


TRIALS = {"random": _trial_random, "ps": _trial_ps, "gt": _trial_gt,
          "flagged": _trial_flagged, "bijection": _trial_bijection, "omega": _trial_omega}


def run_trials(kind="random", trials=100, seed=0, progress=False):
    """
    Run seeded formula against oracle trials.

    Parameters
    ----------
    kind : string
        One of "random", "ps", "gt", "flagged", "bijection" and "omega".
        The default is "random".
    trials : integer
        Number of trials. The default is 100.
    seed : integer
        Seed of numpy's default generator (PCG64). The default is 0.
    progress : boolean
        Whether to draw a progress bar on stderr. The default is False.

    Returns
    -------
    results : pd.DataFrame
        One row per trial with the instance, formula and oracle values and
        whether they match.

    """
    if kind not in TRIALS:
        raise InputError(f"Unknown trial kind '{kind}', use one of {', '.join(KINDS)}.")

    start = time.time()
    rng = np.random.default_rng(seed)

    rows = []
    for trial in tqdm(range(trials), desc=kind, file=sys.stderr, disable=not progress):
        row = TRIALS[kind](rng)
        row["trial"] = trial
        rows.append(row)

    results = pd.DataFrame(rows)
    if not results.empty:
        results = results[["trial"] + [c for c in results.columns if c != "trial"]]

    logger.info("Finished %d %s trials! Execution time: %.2f seconds.", trials, kind, time.time() - start)

    return results


def check_family(spec, flags=None, dilations=3):
    """
    Compare the Ehrhart polynomial of a family instance with the brute-force
    and tableau counts of its dilates, n = 1, ..., dilations.

    Parameters
    ----------
    spec : PSSpec or GTSpec
        The family data.
    flags : FlagSpec, optional
        Flags of a flagged GT face. The default is None.
    dilations : integer
        Largest dilation factor. The default is 3.

    Returns
    -------
    results : pd.DataFrame
        One row per dilation factor.

    """
    M = family_marked(spec, flags)

    # Outside the order cone every dilate is empty
    g = ehrhart_polynomial(M, verify=False) if in_order_cone(M) else UniPoly()

    rows = []
    for n in range(1, dilations + 1):
        dilated = spec.dilate(n)
        value = g(n)
        if value.denominator != 1:
            raise VerificationFailure(f"The Ehrhart polynomial is not integral at n = {n}.")
        formula = value.numerator
        bruteforce = count_bruteforce(family_marked(dilated, flags))
        oracle = tableau_count(dilated, flags)
        rows.append({"n": n, "formula": formula, "oracle": oracle, "bruteforce": bruteforce,
                     "match": formula == oracle == bruteforce})

    return pd.DataFrame(rows)


def check_marked(M, dilations=3):
    """Ehrhart polynomial of a marked poset against brute force on its dilates."""
    g = ehrhart_polynomial(M, verify=False) if in_order_cone(M) else UniPoly()

    rows = []
    for n in range(1, dilations + 1):
        formula = g(n)
        oracle = count_bruteforce(dilate_marking(M, n))
        rows.append({"n": n, "formula": formula.numerator if formula.denominator == 1 else str(formula),
                     "oracle": oracle, "match": formula == oracle})

    return pd.DataFrame(rows)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, stream=sys.stderr)

    for kind in KINDS:
        results = run_trials(kind, trials=20, seed=7, progress=True)
        print(f"{kind}: {results['match'].sum()}/{len(results)} trials match.")
