"""Turtle-subset loader for temporal descriptions and their resolution to intervals.

Documents use the HuTime vocabulary (an OWL-Time extension) to describe
uncertain time intervals.  Each of the four boundary values can be given
three ways, and the styles can be mixed on one resource:

* a Julian-day literal (``hutime:hasPossibleJdBeginning`` and friends);
* a boundary instant (``hutime:hasPossibleBeginning`` pointing at a
  ``time:Instant`` whose ``time:inXSDDate`` pins the value to that date's
  midnight);
* a range reference (``hutime:hasRangeOfBeginning`` / ``hasRangeOfEnd``
  pointing at another temporal resource, whose possible interval supplies
  the two values of that boundary range -- so intervals can be defined
  recursively in terms of other intervals).

``time:ProperInterval`` resources resolve to zero-width ranges, and
calendar-period URIs (``http://datetime.hutime.org/calendar/...``) are
resolved offline from their URI path, never fetched.

The parser covers only the subset needed for such documents: @prefix
directives, subject/predicate/object statements with ``;`` lists and ``,``
object lists, bracketed anonymous nodes, typed literals, and ``a`` for
rdf:type.  It is deliberately forgiving about the loose punctuation seen in
published snippets (missing final dots, a new subject opening right after a
``;``, undeclared prefixes, bare numeric literals with a datatype suffix).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import calendar as cal
from .core import UncertainInterval, make_uncertain
from .errors import VaguetimeError

HUTIME = "http://resource.hutime.org/ontology/"
TIME = "http://www.w3.org/2006/time#"
XSD = "http://www.w3.org/2001/XMLSchema#"
CALENDAR_BASE = "http://datetime.hutime.org/calendar/"

_UNCERTAIN_CLASS = HUTIME + "UncertainTimeInterval"
_PROPER_CLASS = TIME + "ProperInterval"
_INSTANT_CLASS = TIME + "Instant"
_TEMPORAL_ENTITY_CLASS = TIME + "TemporalEntity"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

# predicate -> slots it feeds: 0 pb, 1 rb, 2 re, 3 pe
_JD_PROPS = {
    HUTIME + "hasPossibleJdBeginning": 0,
    HUTIME + "hasReliableJdBeginning": 1,
    HUTIME + "hasReliableJdEnd": 2,
    HUTIME + "hasPossibleJdEnd": 3,
}
_INSTANT_PROPS = {
    HUTIME + "hasPossibleBeginning": 0,
    HUTIME + "hasReliableBeginning": 1,
    HUTIME + "hasReliableEnd": 2,
    HUTIME + "hasPossibleEnd": 3,
}
_RANGE_PROPS = {
    HUTIME + "hasRangeOfBeginning": (0, 1),
    HUTIME + "hasRangeOfEnd": (2, 3),
}
_PROPER_PROPS = {
    TIME + "hasBeginning": (0, 1),
    TIME + "hasEnd": (2, 3),
}
_IN_XSD_DATE = TIME + "inXSDDate"

_KNOWN_PREDICATES = (
    {RDF_TYPE, _IN_XSD_DATE}
    | set(_JD_PROPS)
    | set(_INSTANT_PROPS)
    | set(_RANGE_PROPS)
    | set(_PROPER_PROPS)
)
_KNOWN_CLASSES = {
    _UNCERTAIN_CLASS,
    _PROPER_CLASS,
    _INSTANT_CLASS,
    _TEMPORAL_ENTITY_CLASS,
}

_SLOT_NAMES = ("pb", "rb", "re", "pe")
_CONFLICT_TOLERANCE = 1e-9  # days


class ParseError(VaguetimeError):
    def __init__(self, reason: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {reason}")
        self.reason = reason
        self.line = line
        self.col = col


class UnresolvedReference(VaguetimeError):
    """A referenced resource is missing, incomplete, or has the wrong shape."""


class CycleDetected(VaguetimeError):
    def __init__(self, chain: tuple[str, ...]):
        super().__init__("reference cycle: " + " -> ".join(chain))
        self.chain = chain


class ConflictingSpecification(VaguetimeError):
    """One boundary received two values that disagree beyond tolerance."""


@dataclass(frozen=True)
class Literal:
    lexical: str
    datatype: str | None = None


@dataclass
class TemporalResource:
    id: str
    types: list[str] = field(default_factory=list)
    properties: dict[str, list[object]] = field(default_factory=dict)
    order: int = 0

    @property
    def kind(self) -> str | None:
        if self.id.startswith(CALENDAR_BASE):
            return "calendar-ref"
        if _UNCERTAIN_CLASS in self.types:
            return "uncertain-interval"
        if _PROPER_CLASS in self.types:
            return "proper-interval"
        if _INSTANT_CLASS in self.types:
            return "instant"
        return None

    def add(self, predicate: str, value: object) -> None:
        self.properties.setdefault(predicate, []).append(value)


@dataclass
class TemporalDocument:
    resources: dict[str, TemporalResource] = field(default_factory=dict)
    prefixes: dict[str, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def resource(self, res_id: str) -> TemporalResource:
        res = self.resources.get(res_id)
        if res is None:
            res = TemporalResource(res_id, order=len(self.resources))
            self.resources[res_id] = res
        return res

    def warn_once(self, message: str) -> None:
        if message not in self.warnings:
            self.warnings.append(message)


@dataclass(frozen=True)
class ResolvedInterval:
    id: str
    interval: UncertainInterval
    provenance: dict[str, str]


@dataclass(frozen=True)
class ResolutionFailure:
    id: str
    error: VaguetimeError


# ---------------------------------------------------------------------------
# Tokenizer


@dataclass(frozen=True)
class _Token:
    type: str  # 'prefix', 'iri', 'pname', 'string', 'number', 'punct', 'eof'
    value: object
    datatype: str | None
    line: int
    col: int


_PNAME_STOP = set(" \t\r\n;,[]()<>\"#")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _skip_space(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def tokens(self) -> list[_Token]:
        out = []
        while True:
            tok = self._next()
            out.append(tok)
            if tok.type == "eof":
                return out

    def _next(self) -> _Token:
        self._skip_space()
        line, col = self.line, self.col
        if self.pos >= len(self.text):
            return _Token("eof", None, None, line, col)
        ch = self.text[self.pos]
        if ch == "@":
            word = self._read_until_stop()
            if word != "@prefix":
                raise ParseError(f"unsupported directive {word!r}", line, col)
            return _Token("prefix", word, None, line, col)
        if ch == "<":
            return self._read_iri(line, col)
        if ch == '"':
            return self._read_string(line, col)
        if ch in ";,[]()":
            self._advance()
            return _Token("punct", ch, None, line, col)
        if ch == ".":
            # A bare dot is punctuation; digits after it belong to a number
            # only when the token started with a digit (handled below).
            self._advance()
            return _Token("punct", ".", None, line, col)
        if ch.isdigit() or (
            ch in "+-"
            and self.pos + 1 < len(self.text)
            and self.text[self.pos + 1].isdigit()
        ):
            return self._read_number(line, col)
        return self._read_pname(line, col)

    def _read_until_stop(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in _PNAME_STOP:
            self._advance()
        return self.text[start:self.pos]

    def _read_iri(self, line: int, col: int) -> _Token:
        self._advance()  # '<'
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ">\n":
            self._advance()
        if self.pos >= len(self.text) or self.text[self.pos] != ">":
            raise ParseError("unterminated IRI", line, col)
        iri = self.text[start:self.pos]
        self._advance()
        return _Token("iri", iri, None, line, col)

    def _read_string(self, line: int, col: int) -> _Token:
        self._advance()  # opening quote
        chars = []
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "\\" and self.pos + 1 < len(self.text):
                chars.append(self.text[self.pos + 1])
                self._advance(2)
                continue
            if ch == '"':
                self._advance()
                datatype = self._read_datatype()
                return _Token("string", "".join(chars), datatype, line, col)
            if ch == "\n":
                break
            chars.append(ch)
            self._advance()
        raise ParseError("unterminated string literal", line, col)

    def _read_datatype(self) -> str | None:
        if self.text[self.pos:self.pos + 2] != "^^":
            return None
        self._advance(2)
        if self.pos < len(self.text) and self.text[self.pos] == "<":
            return self._read_iri(self.line, self.col).value  # type: ignore[return-value]
        name = self._read_until_stop()
        return self._strip_trailing_dots(name)

    def _strip_trailing_dots(self, name: str) -> str:
        # A trailing dot is the statement terminator, not part of the name.
        while name.endswith("."):
            name = name[:-1]
            self.pos -= 1
            self.col -= 1
        return name

    def _read_number(self, line: int, col: int) -> _Token:
        start = self.pos
        if self.text[self.pos] in "+-":
            self._advance()
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch.isdigit():
                self._advance()
            elif (
                ch == "."
                and self.pos + 1 < len(self.text)
                and self.text[self.pos + 1].isdigit()
            ):
                self._advance()
            elif ch in "eE" and self.pos + 1 < len(self.text) and (
                self.text[self.pos + 1].isdigit()
                or self.text[self.pos + 1] in "+-"
            ):
                self._advance(2)
            else:
                break
        lexical = self.text[start:self.pos]
        try:
            value = float(lexical)
        except ValueError:
            raise ParseError(f"malformed number {lexical!r}", line, col) from None
        datatype = self._read_datatype()
        return _Token("number", value, datatype, line, col)

    def _read_pname(self, line: int, col: int) -> _Token:
        name = self._read_until_stop()
        if not name:
            raise ParseError(
                f"unexpected character {self.text[self.pos]!r}", line, col
            )
        name = self._strip_trailing_dots(name)
        if not name:
            raise ParseError("unexpected '.'", line, col)
        return _Token("pname", name, None, line, col)


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = _Lexer(text).tokens()
        self.idx = 0
        self.doc = TemporalDocument()
        self.bnode_count = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.idx + ahead, len(self.tokens) - 1)]

    def next(self) -> _Token:
        tok = self.peek()
        if tok.type != "eof":
            self.idx += 1
        return tok

    def _error(self, tok: _Token, reason: str) -> ParseError:
        return ParseError(reason, tok.line, tok.col)

    def parse(self) -> TemporalDocument:
        while True:
            tok = self.peek()
            if tok.type == "eof":
                return self.doc
            if tok.type == "prefix":
                self._parse_prefix()
            else:
                self._parse_statement()

    def _parse_prefix(self) -> None:
        self.next()  # '@prefix'
        ns = self.next()
        if ns.type != "pname" or not str(ns.value).endswith(":"):
            raise self._error(ns, "expected prefix name ending in ':'")
        iri = self.next()
        if iri.type != "iri":
            raise self._error(iri, "expected IRI in prefix declaration")
        self.doc.prefixes[str(ns.value)[:-1]] = str(iri.value)
        if self.peek().type == "punct" and self.peek().value == ".":
            self.next()  # trailing dot is optional here

    def _expand(self, tok: _Token) -> str:
        if tok.type == "iri":
            return str(tok.value)
        name = str(tok.value)
        if ":" not in name:
            raise self._error(tok, f"expected IRI or prefixed name, got {name!r}")
        prefix, local = name.split(":", 1)
        base = self.doc.prefixes.get(prefix)
        if base is None:
            self.doc.warn_once(
                f"undeclared prefix {prefix!r}: keeping {name!r} verbatim"
            )
            return name
        return base + local

    def _parse_statement(self) -> None:
        subj_tok = self.next()
        if subj_tok.type not in ("iri", "pname"):
            raise self._error(subj_tok, "expected a subject")
        subject = self._expand(subj_tok)
        self._parse_predicate_list(subject, in_bnode=False)

    def _starts_new_statement(self) -> bool:
        head = self.peek()
        follow = self.peek(1)
        return (
            head.type in ("iri", "pname")
            and head.value != "a"
            and follow.type == "pname"
            and follow.value == "a"
        )

    def _parse_predicate_list(self, subject: str, in_bnode: bool) -> None:
        resource = self.doc.resource(subject)
        while True:
            pred_tok = self.next()
            if pred_tok.type == "pname" and pred_tok.value == "a":
                predicate = RDF_TYPE
            elif pred_tok.type in ("iri", "pname"):
                predicate = self._expand(pred_tok)
            else:
                raise self._error(pred_tok, "expected a predicate")
            while True:
                value = self._parse_object(pred_tok)
                if predicate == RDF_TYPE:
                    if not isinstance(value, str):
                        raise self._error(pred_tok, "rdf:type needs a resource")
                    resource.types.append(value)
                    if value not in _KNOWN_CLASSES and not value.startswith(
                        CALENDAR_BASE
                    ):
                        self.doc.warn_once(f"unknown rdf:type {value!r} ignored")
                else:
                    resource.add(predicate, value)
                    if predicate not in _KNOWN_PREDICATES:
                        self.doc.warn_once(
                            f"unknown predicate {predicate!r} ignored by resolution"
                        )
                if self.peek().type == "punct" and self.peek().value == ",":
                    self.next()
                    continue
                break
            tok = self.peek()
            if tok.type == "punct" and tok.value == ";":
                self.next()
                nxt = self.peek()
                if nxt.type == "punct" and nxt.value == ".":
                    if in_bnode:
                        raise self._error(nxt, "'.' inside anonymous node")
                    self.next()
                    return
                if in_bnode and nxt.type == "punct" and nxt.value == "]":
                    return
                if nxt.type == "eof":
                    return
                if not in_bnode and self._starts_new_statement():
                    return  # loose input: next statement opens without a dot
                continue
            if tok.type == "punct" and tok.value == ".":
                if in_bnode:
                    raise self._error(tok, "'.' inside anonymous node")
                self.next()
                return
            if in_bnode and tok.type == "punct" and tok.value == "]":
                return
            if tok.type == "eof":
                if in_bnode:
                    raise self._error(tok, "unclosed anonymous node")
                return
            raise self._error(tok, f"expected ';' or '.', got {tok.value!r}")

    def _parse_object(self, pred_tok: _Token) -> object:
        tok = self.peek()
        if tok.type == "punct" and tok.value == "[":
            self.next()
            bnode_id = f"_:b{self.bnode_count}"
            self.bnode_count += 1
            closer = self.peek()
            if closer.type == "punct" and closer.value == "]":
                self.next()
                self.doc.resource(bnode_id)
                return bnode_id
            self._parse_predicate_list(bnode_id, in_bnode=True)
            closer = self.next()
            if closer.type != "punct" or closer.value != "]":
                raise self._error(closer, "expected ']' to close anonymous node")
            return bnode_id
        tok = self.next()
        if tok.type in ("iri", "pname"):
            return self._expand(tok)
        if tok.type == "number":
            return float(tok.value)  # type: ignore[arg-type]
        if tok.type == "string":
            return Literal(str(tok.value), self._expand_datatype(tok))
        raise self._error(tok, f"expected an object after {pred_tok.value!r}")

    def _expand_datatype(self, tok: _Token) -> str | None:
        if tok.datatype is None:
            return None
        if "://" in tok.datatype:
            return tok.datatype
        return self._expand(_Token("pname", tok.datatype, None, tok.line, tok.col))


def parse_turtle(text: str) -> TemporalDocument:
    """Parse a Turtle-subset document into resources plus a warning channel."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Resolution


def _datatype_local(datatype: str | None) -> str | None:
    if datatype is None:
        return None
    for sep in ("#", "/", ":"):
        if sep in datatype:
            datatype = datatype.rsplit(sep, 1)[1]
    return datatype


class _Resolver:
    def __init__(self, doc: TemporalDocument,
                 registry: dict[str, cal.CalendarSystem] | None):
        self.doc = doc
        self.registry = registry or cal.DEFAULT_CALENDAR_REGISTRY
        self.cache: dict[str, ResolvedInterval | VaguetimeError] = {}
        self.stack: list[str] = []

    def resolve(self, res_id: str) -> ResolvedInterval:
        cached = self.cache.get(res_id)
        if cached is not None:
            if isinstance(cached, VaguetimeError):
                raise cached
            return cached
        if res_id in self.stack:
            chain = tuple(self.stack[self.stack.index(res_id):]) + (res_id,)
            raise CycleDetected(chain)
        self.stack.append(res_id)
        try:
            resolved = self._resolve_uncached(res_id)
        except VaguetimeError as exc:
            self.cache[res_id] = exc
            raise
        finally:
            self.stack.pop()
        self.cache[res_id] = resolved
        return resolved

    def _resolve_uncached(self, res_id: str) -> ResolvedInterval:
        if res_id.startswith(CALENDAR_BASE):
            return self._resolve_calendar(res_id)
        res = self.doc.resources.get(res_id)
        if res is None:
            raise UnresolvedReference(f"{res_id} is not defined in the document")
        kind = res.kind
        if kind == "instant":
            jd = self._instant_value(res_id, context=res_id)
            return ResolvedInterval(
                res_id,
                make_uncertain(jd, jd, jd, jd),
                {name: "instant value" for name in _SLOT_NAMES},
            )
        if kind in ("uncertain-interval", "proper-interval"):
            return self._resolve_interval(res)
        raise UnresolvedReference(
            f"{res_id} is not a temporal resource (types: {res.types or 'none'})"
        )

    def _resolve_calendar(self, uri: str) -> ResolvedInterval:
        path = uri[len(CALENDAR_BASE):]
        parts = path.split("/")
        if len(parts) != 3:
            raise UnresolvedReference(
                f"calendar URI {uri} does not match <id>/<granularity>/<anchor>"
            )
        cal_id, segment, anchor = parts
        system = self.registry.get(cal_id)
        if system is None:
            raise UnresolvedReference(f"unknown calendar id {cal_id!r} in {uri}")
        if segment not in ("date", "day", "month", "year", "decade"):
            self.doc.warn_once(
                f"unknown calendar granularity segment {segment!r} in {uri}"
            )
        try:
            period = cal.parse_iso(anchor, system)
        except cal.ParseError as exc:
            raise UnresolvedReference(f"bad calendar anchor in {uri}: {exc}") from exc
        bounds = cal.period_bounds(period)
        prov = f"calendar period {path}"
        return ResolvedInterval(
            uri,
            make_uncertain(bounds.begin, bounds.begin, bounds.end, bounds.end),
            {name: prov for name in _SLOT_NAMES},
        )

    def _instant_value(self, value: object, context: str) -> float:
        """A single JD from a temporal-entity value of a boundary property."""
        if isinstance(value, float):
            raise UnresolvedReference(
                f"boundary instant of {context} must be a temporal entity, "
                "not a bare number (use the Jd properties for literals)"
            )
        if isinstance(value, Literal):
            raise UnresolvedReference(
                f"boundary instant of {context} must be a temporal entity, "
                f"not the literal {value.lexical!r}"
            )
        res = self.doc.resources.get(str(value))
        if res is None:
            raise UnresolvedReference(
                f"boundary instant {value} of {context} is not defined"
            )
        dates = res.properties.get(_IN_XSD_DATE, [])
        if len(dates) != 1:
            raise UnresolvedReference(
                f"instant {res.id} needs exactly one {_IN_XSD_DATE}, "
                f"found {len(dates)}"
            )
        lit = dates[0]
        if not isinstance(lit, Literal):
            raise UnresolvedReference(f"instant {res.id} date must be a literal")
        local = _datatype_local(lit.datatype)
        if local not in (None, "date"):
            raise UnresolvedReference(
                f"instant {res.id} has unsupported datatype {lit.datatype!r}"
            )
        try:
            period = cal.parse_iso(lit.lexical, cal.CalendarSystem.GREGORIAN)
        except cal.ParseError as exc:
            raise UnresolvedReference(
                f"instant {res.id}: bad date {lit.lexical!r}: {exc}"
            ) from exc
        if period.granularity is not cal.Granularity.DAY:
            raise UnresolvedReference(
                f"instant {res.id}: {lit.lexical!r} is not a full date"
            )
        self.doc.warn_once(
            f"date {lit.lexical!r} spans a day but pins an instant; "
            "using its midnight"
        )
        return cal.to_julian_day(period.start_date())

    def _resolve_interval(self, res: TemporalResource) -> ResolvedInterval:
        slots: list[float | None] = [None, None, None, None]
        prov: list[str] = ["", "", "", ""]

        def put(slot: int, value: float, source: str) -> None:
            old = slots[slot]
            if old is not None and not math.isclose(
                old, value, abs_tol=_CONFLICT_TOLERANCE, rel_tol=0.0
            ):
                raise ConflictingSpecification(
                    f"{res.id}: boundary {_SLOT_NAMES[slot]} given twice "
                    f"({old!r} from {prov[slot]}, {value!r} from {source})"
                )
            if old is None:
                slots[slot] = value
                prov[slot] = source

        for predicate, values in res.properties.items():
            short = predicate.rsplit("/", 1)[-1].rsplit("#", 1)[-1]
            if predicate in _JD_PROPS:
                for value in values:
                    if isinstance(value, Literal):
                        local = _datatype_local(value.datatype)
                        if local not in ("double", "decimal", "float", None):
                            raise UnresolvedReference(
                                f"{res.id}: {short} has non-numeric datatype "
                                f"{value.datatype!r}"
                            )
                        try:
                            value = float(value.lexical)
                        except ValueError:
                            raise UnresolvedReference(
                                f"{res.id}: {short} literal "
                                f"{value.lexical!r} is not a number"
                            ) from None
                    if not isinstance(value, float):
                        raise UnresolvedReference(
                            f"{res.id}: {short} expects a numeric literal"
                        )
                    put(_JD_PROPS[predicate], value, short)
            elif predicate in _INSTANT_PROPS:
                for value in values:
                    jd = self._instant_value(value, context=res.id)
                    put(_INSTANT_PROPS[predicate], jd, short)
            elif predicate in _RANGE_PROPS:
                lo_slot, hi_slot = _RANGE_PROPS[predicate]
                for value in values:
                    if not isinstance(value, str):
                        raise UnresolvedReference(
                            f"{res.id}: {short} expects a resource reference"
                        )
                    ref = self.resolve(value)
                    source = f"{short} {value} (possible interval)"
                    put(lo_slot, ref.interval.pb, source)
                    put(hi_slot, ref.interval.pe, source)
            elif predicate in _PROPER_PROPS:
                lo_slot, hi_slot = _PROPER_PROPS[predicate]
                for value in values:
                    jd = self._instant_value(value, context=res.id)
                    put(lo_slot, jd, short)
                    put(hi_slot, jd, short)

        missing = [
            _SLOT_NAMES[i] for i, value in enumerate(slots) if value is None
        ]
        if missing:
            raise UnresolvedReference(
                f"{res.id}: boundary value(s) {', '.join(missing)} not specified"
            )
        interval = make_uncertain(*slots)  # raises InvalidBounds when inconsistent
        return ResolvedInterval(
            res.id, interval, dict(zip(_SLOT_NAMES, prov))
        )


def resolve(
    doc: TemporalDocument,
    res_id: str,
    registry: dict[str, cal.CalendarSystem] | None = None,
) -> ResolvedInterval:
    """Resolve one resource (and anything it references) to concrete values."""
    return _Resolver(doc, registry).resolve(res_id)


def resolve_all(
    doc: TemporalDocument,
    registry: dict[str, cal.CalendarSystem] | None = None,
) -> tuple[list[ResolvedInterval], list[ResolutionFailure]]:
    """Resolve every interval resource in document order; report failures per id."""
    resolver = _Resolver(doc, registry)
    resolved: list[ResolvedInterval] = []
    failures: list[ResolutionFailure] = []
    for res_id, res in doc.resources.items():
        if res.kind not in ("uncertain-interval", "proper-interval"):
            continue
        try:
            resolved.append(resolver.resolve(res_id))
        except VaguetimeError as exc:
            failures.append(ResolutionFailure(res_id, exc))
    return resolved, failures


# ---------------------------------------------------------------------------
# Emission


def _format_float(value: float) -> str:
    return repr(float(value))


def _subject_text(res_id: str) -> str:
    if "://" in res_id:
        return f"<{res_id}>"
    return res_id


def emit_turtle(intervals: list[ResolvedInterval]) -> str:
    """Serialize resolved intervals with the four Julian-day properties.

    Values survive a parse/resolve round trip bit-exactly.
    """
    lines = [
        "@prefix hutime: <http://resource.hutime.org/ontology/> .",
        f"@prefix xsd: <{XSD}> .",
        "",
    ]
    for item in intervals:
        w = item.interval
        lines.append(f"{_subject_text(item.id)} a hutime:UncertainTimeInterval ;")
        for prop, value in (
            ("hasPossibleJdBeginning", w.pb),
            ("hasReliableJdBeginning", w.rb),
            ("hasReliableJdEnd", w.re),
            ("hasPossibleJdEnd", w.pe),
        ):
            tail = ";" if prop != "hasPossibleJdEnd" else "."
            lines.append(
                f'  hutime:{prop} "{_format_float(value)}"^^xsd:double {tail}'
            )
        lines.append("")
    return "\n".join(lines)
