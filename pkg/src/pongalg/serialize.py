"""JSON records for generators, elements and triangle data.

Output is canonical: keys sorted, terms sorted by generator then monomial, no
floats.  Weights only ever appear doubled and Euler measures as "p/q".
"""

from __future__ import annotations

import json
from fractions import Fraction

from .asteroids import CyclicLiftedPermutation
from .core import InvalidGenerator, LiftedPermutation
from .polynomial import Element

ALGEBRAS = {"pong": LiftedPermutation, "asteroids": CyclicLiftedPermutation}


class InvalidRecord(ValueError):
    pass


def algebra_name(gen) -> str:
    for name, cls in ALGEBRAS.items():
        if isinstance(gen, cls):
            return name
    raise TypeError(f"not a generator: {gen!r}")


def generator_to_record(gen) -> dict:
    return {
        "algebra": algebra_name(gen),
        "m": gen.m,
        "k": gen.k,
        "domain": list(gen.domain),
        "values": list(gen.values),
    }


def _int_list(rec, key) -> list[int]:
    val = rec.get(key)
    if not isinstance(val, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in val
    ):
        raise InvalidRecord(f"{key!r} must be a list of integers, got {val!r}")
    return val


def record_to_generator(rec, default_algebra: str = "pong"):
    if not isinstance(rec, dict):
        raise InvalidRecord(f"generator record must be an object, got {type(rec).__name__}")
    name = rec.get("algebra", default_algebra)
    if name not in ALGEBRAS:
        raise InvalidRecord(f"unknown algebra {name!r}")
    m = rec.get("m")
    if not isinstance(m, int) or isinstance(m, bool):
        raise InvalidRecord(f"'m' must be an integer, got {m!r}")
    domain, values = _int_list(rec, "domain"), _int_list(rec, "values")
    if "k" in rec and rec["k"] != len(domain):
        raise InvalidRecord(f"k={rec['k']!r} but the domain has {len(domain)} entries")
    try:
        return ALGEBRAS[name](m, tuple(domain), tuple(values))
    except InvalidGenerator as exc:
        raise InvalidRecord(str(exc)) from exc


def element_to_record(el: Element) -> dict:
    return {
        "terms": [
            {"generator": generator_to_record(g), "monomials": [list(x) for x in monos]}
            for g, monos in el.items()
        ]
    }


def record_to_element(rec, default_algebra: str = "pong") -> Element:
    """Accepts an element record or a bare generator record."""
    if isinstance(rec, dict) and "terms" not in rec and "domain" in rec:
        return Element.generator(record_to_generator(rec, default_algebra))
    if not isinstance(rec, dict) or not isinstance(rec.get("terms"), list):
        raise InvalidRecord("element record needs a 'terms' list")
    out = Element()
    seen_types = set()
    seen_gens = set()
    for term in rec["terms"]:
        if not isinstance(term, dict):
            raise InvalidRecord(f"term must be an object, got {term!r}")
        gen = record_to_generator(term.get("generator"), default_algebra)
        if gen in seen_gens:
            raise InvalidRecord(f"generator {gen!r} listed twice")
        seen_gens.add(gen)
        seen_types.add((type(gen), gen.m, gen.k))
        monos = term.get("monomials")
        if not isinstance(monos, list) or not monos:
            raise InvalidRecord(f"term for {gen!r} needs a non-empty 'monomials' list")
        seen = set()
        for mono in monos:
            mono = tuple(_int_list({"monomial": mono}, "monomial"))
            if len(mono) != gen.m or any(e < 0 for e in mono):
                raise InvalidRecord(f"bad monomial {list(mono)} for m={gen.m}")
            if mono in seen:
                raise InvalidRecord(f"duplicate monomial {list(mono)} for {gen!r}")
            seen.add(mono)
            out.iadd_term(gen, mono)
    if len(seen_types) > 1:
        raise InvalidRecord("terms mix algebras or contexts")
    return out


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


def triangle_record(dom) -> dict:
    return {
        "f": generator_to_record(dom.f),
        "g": generator_to_record(dom.g),
        "composite": generator_to_record(dom.composite),
        "o_counts": list(dom.o_counts),
        "diag_count": dom.diag_count,
        "maslov": dom.maslov,
        "euler": fraction_str(dom.euler),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidRecord(f"malformed JSON: {exc}") from exc
