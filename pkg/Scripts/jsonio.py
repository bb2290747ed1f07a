#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json
import sys
from exceptions import InputError, InvalidSpec
from families import FlagSpec, GTSpec, PSSpec
from marked import MarkedPoset
from poset import SkewShape, from_covers
from polynomial import MultiPoly, UniPoly, unipoly_from_json, unipoly_to_json


def read_document(path):
    """
    Load a JSON document from a file, "-" reading the standard input.

    Parameters
    ----------
    path : string
        File name or "-".

    Returns
    -------
    document : dict
        The parsed document.

    """
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as error:
        raise InputError(f"Cannot read '{path}': {error.strerror}.")
    except json.JSONDecodeError as error:
        raise InputError(f"'{path}' is not valid JSON: {error}.")


def dumps(document):
    return json.dumps(document, indent=2)


def _field(document, key, kind=None):
    if not isinstance(document, dict) or key not in document:
        raise InputError(f"The document has no '{key}' field.")
    value = document[key]
    if kind is not None and not isinstance(value, kind):
        raise InputError(f"Field '{key}' has the wrong type.")
    return value


def poset_to_json(P):
    return {"elements": list(P.labels), "covers": [list(pair) for pair in P.covers]}


def poset_from_json(document):
    """Poset from {"elements": [...], "covers": [[lower, upper], ...]}."""
    elements = _field(document, "elements", list)
    covers = _field(document, "covers", list)
    try:
        pairs = [(int(lower), int(upper)) for lower, upper in covers]
    except (TypeError, ValueError):
        raise InputError("Covers must be pairs of element indices.")
    return from_covers(elements, pairs)


def skew_to_json(shape):
    return {"lambda": list(shape.lam), "mu": [part for part in shape.mu if part > 0]}


def skew_from_json(document):
    return SkewShape(tuple(_field(document, "lambda", list)), tuple(document.get("mu", [])))


def marked_to_json(M):
    """Poset document plus {"marked": {label: value}}."""
    document = poset_to_json(M.poset)
    document["marked"] = {M.poset.labels[a]: value for a, value in M.marks.items()}
    return document


def marked_from_json(document):
    P = poset_from_json(document)
    marked = _field(document, "marked", dict)
    return MarkedPoset(P, {P.index(label): value for label, value in marked.items()})


def spec_to_json(spec, flags=None):
    """
    Family document {"family", "k", "m", "y", "z"} with "a", "b" for the
    flagged GT family.
    """
    family = "ps" if type(spec) is PSSpec else "gt"
    document = {"family": family, "k": spec.k, "m": spec.m, "y": list(spec.y), "z": list(spec.z)}
    if flags is not None:
        document.update({"family": "gt-flagged", "a": list(flags.a), "b": list(flags.b)})
    return document


def spec_from_json(document):
    """
    Read a family document.

    Returns
    -------
    spec : PSSpec or GTSpec
        The family data.
    flags : FlagSpec or None
        The flags of a "gt-flagged" document.

    """
    family = _field(document, "family", str)
    if family not in ("ps", "gt", "gt-flagged"):
        raise InvalidSpec(f"Unknown family '{family}', use 'ps', 'gt' or 'gt-flagged'.")

    try:
        k, m = int(_field(document, "k")), int(_field(document, "m"))
    except (TypeError, ValueError):
        raise InvalidSpec("k and m must be integers.")

    cls = PSSpec if family == "ps" else GTSpec
    spec = cls(k, m, tuple(_field(document, "y", list)), tuple(_field(document, "z", list)))

    flags = None
    if family == "gt-flagged":
        flags = FlagSpec(tuple(_field(document, "a", list)), tuple(_field(document, "b", list)))
        flags.validate(k, m)

    return spec, flags


def is_spec_document(document):
    return isinstance(document, dict) and "family" in document


def polynomial_to_json(p):
    if isinstance(p, UniPoly):
        return unipoly_to_json(p)
    return p.to_json()


def polynomial_from_json(document, univariate=False):
    if univariate:
        return unipoly_from_json(document)
    return MultiPoly.from_json(document)
