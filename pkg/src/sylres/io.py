"""Text and JSON input handling for the CLI.

Multiset shorthand: "1:2,3/2:1" means root 1 with multiplicity 2 and root
3/2 simple; a bare value means multiplicity 1. JSON forms follow the wire
schemas of the poly and rootsets modules. Everything is canonicalized on
parse (sorted values, merged multiplicities, reduced rationals).
"""

from __future__ import annotations

import json

from .errors import ParseError, ValidationError
from .poly import Poly
from .rationals import parse_rational
from .rootsets import RootMultiset


def parse_multiset(text: str) -> RootMultiset:
    s = text.strip()
    if not s:
        return RootMultiset.empty()
    if s.startswith("{"):
        return RootMultiset.from_json(_load_json(s))
    pairs = []
    for pos, chunk in enumerate(s.split(",")):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty multiset entry", pos)
        if ":" in chunk:
            value_text, _, mult_text = chunk.partition(":")
            try:
                mult = int(mult_text)
            except ValueError:
                raise ParseError(f"bad multiplicity {mult_text!r}", pos)
        else:
            value_text, mult = chunk, 1
        pairs.append((parse_rational(value_text), mult))
    return RootMultiset(pairs)


def parse_poly(text: str) -> Poly:
    s = text.strip()
    if s.startswith("{"):
        return Poly.from_json(_load_json(s))
    # comma list of ascending coefficients
    if not s:
        return Poly.zero()
    return Poly(parse_rational(c) for c in s.split(","))


def parse_index_set(text: str) -> tuple:
    s = text.strip()
    if not s:
        return ()
    try:
        return tuple(sorted(int(c) for c in s.split(",")))
    except ValueError:
        raise ParseError(f"bad index list {text!r}")


def parse_instance(text: str):
    """Parse JSON or shorthand into a multiset or polynomial.

    JSON objects are dispatched on their keys; non-JSON text is multiset
    shorthand.
    """
    s = text.strip()
    if s.startswith("{"):
        obj = _load_json(s)
        if "roots" in obj:
            return RootMultiset.from_json(obj)
        if "coeffs" in obj:
            return Poly.from_json(obj)
        raise ValidationError(
            f"JSON object with keys {sorted(obj)} is neither a multiset "
            "nor a polynomial")
    return parse_multiset(s)


def _load_json(s: str) -> dict:
    try:
        return json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos)
