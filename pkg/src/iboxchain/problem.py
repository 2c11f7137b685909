"""JSON problem files: a Cartan matrix, a word and a chain on it."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping

from .cartan import CartanMatrix, cartan_from_json, standard_involution
from .errors import IBoxError, ParseError
from .ibox import Chain, initial_chain
from .iword import IWord, hat_w0_window


@dataclass(frozen=True)
class Problem:
    cartan: CartanMatrix
    word: IWord
    chain: Chain

    def to_json(self) -> dict:
        return {"cartan": self.cartan.to_json(), "word": self.word.to_json(),
                "chain": self.chain.to_json()}


def _field(obj: Mapping, key: str, where: str) -> Any:
    if not isinstance(obj, Mapping):
        raise ParseError(f"{where}: expected an object")
    if key not in obj:
        raise ParseError(f"{where}: missing field '{key}'")
    return obj[key]


def _parse_word(obj: Mapping, cartan: CartanMatrix) -> IWord:
    window = _field(obj, "window", "word")
    if not (isinstance(window, list) and len(window) == 2):
        raise ParseError("word.window: expected [A, B]")
    if "letters" in obj:
        return IWord.from_window(window, obj["letters"], cartan)
    reduced = _field(obj, "reduced_word", "word")
    inv = obj.get("involution", "auto")
    if inv == "auto":
        if cartan.cartan_type is None:
            raise ParseError("word.involution: 'auto' needs a cartan given by type and rank")
        inv = standard_involution(*cartan.cartan_type)
    elif not isinstance(inv, Mapping):
        raise ParseError("word.involution: expected 'auto' or an object")
    return hat_w0_window(reduced, inv, window, cartan)


def problem_from_json(obj: Mapping) -> Problem:
    where = "cartan"
    try:
        cartan = cartan_from_json(_field(obj, "cartan", "problem"))
        where = "word"
        word = _parse_word(_field(obj, "word", "problem"), cartan)
        if "chain" in obj:
            where = "chain"
            entry = obj["chain"]
            chain = Chain(word, int(_field(entry, "root", "chain")), str(entry.get("ops", "")))
        elif "range" in obj:
            where = "range"
            a, b = obj["range"]
            chain = initial_chain(word, int(a), int(b))
        else:
            chain = initial_chain(word, *word.window)
    except ParseError:
        raise
    except (IBoxError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc
    return Problem(cartan, word, chain)


def load_problem(text: str) -> Problem:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return problem_from_json(obj)
