#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
import os
import sys
import time
from itertools import combinations_with_replacement, product
sys.path.insert(0, "../Scripts")
import pandas as pd
from tqdm import tqdm
from families import GTSpec, PSSpec, family_marked, tableau_count
from marked import ehrhart_polynomial, in_order_cone
from order_poly import linear_term_criterion, omega
from poset import SkewShape, skew_shape_poset
from polynomial import UniPoly, is_coefficient_nonnegative


def family_sweep(cls, max_k=3, max_m=3, max_entry=2):
    """
    Ehrhart polynomials of all instances of one family with k <= max_k, m <= max_m and
    entries of y, z at most max_entry.

    Parameters
    ----------
    cls : type
        PSSpec or GTSpec.
    max_k : integer
        Largest number of rows. The default is 3.
    max_m : integer
        Largest number of interior columns. The default is 3.
    max_entry : integer
        Largest entry of y and z. The default is 2.

    Returns
    -------
    sweep : pd.DataFrame
        One row per instance with the Ehrhart coefficients, the positivity
        flag and the comparison with the tableau count of the instance.

    """
    rows = []
    instances = [(k, m, y, z) for k in range(1, max_k + 1) for m in range(1, max_m + 1)
                 for y in product(range(max_entry + 1), repeat=k)
                 for z in product(range(max_entry + 1), repeat=k)]

    for k, m, y, z in tqdm(instances, desc=cls.__name__, file=sys.stderr):
        spec = cls(k, m, y, z)
        M = family_marked(spec)

        # Empty polytopes have the zero polynomial
        g = ehrhart_polynomial(M, verify=False) if in_order_cone(M) else UniPoly()
        nonnegative, _ = is_coefficient_nonnegative(g)

        points = g(1)
        oracle = tableau_count(spec)

        rows.append({"k": k, "m": m,
                     "y": ",".join(map(str, y)), "z": ",".join(map(str, z)),
                     "Degree": g.degree,
                     "Leading": float(g.leading_coefficient()) if not g.is_zero() else 0.0,
                     "Ehrhart": g.to_text(),
                     "Nonnegative": nonnegative,
                     "Points": int(points),
                     "Oracle": oracle,
                     "Match": points == oracle})

    return pd.DataFrame(rows)


def partitions(max_parts, max_size):
    """All partitions with at most max_parts parts, each at most max_size."""
    for length in range(1, max_parts + 1):
        for parts in combinations_with_replacement(range(max_size, 0, -1), length):
            yield parts


def skew_sweep(max_parts=3, max_size=4):
    """
    Order polynomials of all skew shapes lambda/mu inside a max_parts x
    max_size box, with their positivity and the linear term criterion.
    """
    rows = []
    shapes = []
    for lam in partitions(max_parts, max_size):
        shapes.append(SkewShape(lam))
        for mu in partitions(len(lam), max_size):
            if all(m <= l for l, m in zip(lam, mu)) and sum(mu) < sum(lam):
                shapes.append(SkewShape(lam, mu))

    for shape in tqdm(shapes, desc="skew", file=sys.stderr):
        P = skew_shape_poset(shape)
        p = omega(P)
        nonnegative, _ = is_coefficient_nonnegative(p)
        criterion, _ = linear_term_criterion(P)

        rows.append({"Shape": str(shape),
                     "Cells": P.n,
                     "Leading": float(p.leading_coefficient()),
                     "Omega": p.to_text(),
                     "Nonnegative": nonnegative,
                     "LinearTermCriterion": criterion})

    return pd.DataFrame(rows)


def positivity_to_excel(file_name: str="positivity", max_entry=2):
    """
    Create an .xlsx file with one sheet per family sweep.

    Parameters
    ----------
    file_name : str, default is "positivity"
        The name of the excel file to create/overwrite.
    max_entry : integer
        Largest entry of y and z in the family sweeps. The default is 2.

    Returns
    -------
    None. Instead, the results are saved in an .xlsx file.

    """
    sweeps = {"Pitman-Stanley": family_sweep(PSSpec, max_entry=max_entry),
              "Gelfand-Tsetlin": family_sweep(GTSpec, max_entry=max_entry),
              "Skew shapes": skew_sweep()}

    os.makedirs("../Results", exist_ok=True)

    # Create a xlsxwriter object
    with pd.ExcelWriter(f"../Results/{file_name}.xlsx", engine="xlsxwriter") as writer:
        for sheet_name, sweep in sweeps.items():
            # Write to the excel file
            sweep.to_excel(writer, sheet_name=sheet_name, index=False)

            # Get the xlsxwriter workbook and worksheet objects.
            workbook = writer.book
            worksheet = writer.sheets[sheet_name]

            # Number formatting
            format_num = workbook.add_format({'num_format': '0.000000'})

            # Width of all columns, then the leading coefficient and polynomial
            worksheet.set_column(0, len(sweep.columns) - 1, 12)
            leading = sweep.columns.get_loc("Leading")
            worksheet.set_column(leading, leading, 12, format_num)
            worksheet.set_column(leading + 1, leading + 1, 60)

            failures = int((~sweep["Nonnegative"]).sum())
            print(f"{sheet_name}: {len(sweep)} instances, {failures} with a negative coefficient.")


if __name__ == "__main__":
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr)

    start = time.time()
    positivity_to_excel()
    print(f"Finished! Execution time: {time.time() - start:.2f} seconds.")
