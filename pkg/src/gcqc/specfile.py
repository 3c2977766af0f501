"""Line-oriented code specification files.

::

    # comments start with '#'
    [inner]
    n 4
    generators XXXX ZZZZ
    logical XIXI ZZII        # one X̄ Z̄ pair per line, optional
    distances 2 2            # claimed d_1, d_2, ...

    [chain]
    ks 2 1 0
    ordering 1 2             # optional promotion order of logical labels
    swaps                    # optional labels whose X̄/Z̄ roles are exchanged

    [outer 1]
    N 2
    r 1
    generators ZZ
    K 1
    D 1

``generators`` and ``logical`` may repeat; the other keys may appear once.
Levels and logical labels count from 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from gcqc.builder import OuterCodeSpec, make_outer
from gcqc.partition import NestingStrategy, SubcodeChain, build_chain
from gcqc.pauli import PauliOperator, PauliParseError, parse_pauli
from gcqc.stabilizer import InvalidCodeError, StabilizerCode


class SpecError(ValueError):
    def __init__(self, line: int | None, message: str, path: str | None = None) -> None:
        self.line = line
        self.message = message
        self.path = path
        where = [path] if path else []
        if line is not None:
            where.append(f"line {line}")
        super().__init__(": ".join(where + [message]))


_KEYS = {
    "inner": {"n": "int", "generators": "paulis", "logical": "pair", "distances": "ints"},
    "chain": {"ks": "ints", "ordering": "ints", "swaps": "ints"},
    "outer": {"N": "int", "r": "int", "generators": "paulis", "logical": "pair", "K": "int", "D": "int"},
}
_REPEATABLE = {"generators", "logical"}


@dataclass
class Section:
    name: str
    line: int
    path: str | None = None
    values: dict = field(default_factory=dict)
    lines: dict = field(default_factory=dict)

    def get(self, key, default=None):
        return self.values.get(key, default)

    def require(self, key):
        if key not in self.values:
            raise SpecError(self.line, f"section [{self.name}] is missing '{key}'", self.path)
        return self.values[key]


@dataclass
class CodeSpec:
    inner: Section
    chain: Section | None
    outers: dict[int, Section]
    path: str | None = None


def _parse_value(kind: str, tokens: list[str], line: int):
    try:
        if kind == "int":
            if len(tokens) != 1:
                raise SpecError(line, f"expected one integer, got {len(tokens)} values")
            return int(tokens[0])
        if kind == "ints":
            return [int(t) for t in tokens]
        if kind == "paulis":
            return [parse_pauli(t) for t in tokens]
        if kind == "pair":
            if len(tokens) != 2:
                raise SpecError(line, "a logical line needs exactly two operators: X̄ then Z̄")
            return tuple(parse_pauli(t) for t in tokens)
    except PauliParseError as exc:
        raise SpecError(line, str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(line, f"bad integer: {exc}") from None
    raise AssertionError(kind)


def parse_spec(text: str, path: str | None = None) -> CodeSpec:
    sections: list[Section] = []
    current: Section | None = None
    try:
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("["):
                if not line.endswith("]"):
                    raise SpecError(lineno, f"malformed section header {line!r}")
                header = line[1:-1].split()
                if header[:1] == ["inner"] and len(header) == 1:
                    current = Section("inner", lineno, path)
                elif header[:1] == ["chain"] and len(header) == 1:
                    current = Section("chain", lineno, path)
                elif header[:1] == ["outer"] and len(header) == 2 and header[1].isdigit():
                    current = Section(f"outer {int(header[1])}", lineno, path)
                else:
                    raise SpecError(lineno, f"unknown section {line!r}")
                if any(s.name == current.name for s in sections):
                    raise SpecError(lineno, f"duplicate section [{current.name}]")
                sections.append(current)
                continue
            if current is None:
                raise SpecError(lineno, "content before the first section header")
            key, *tokens = line.split()
            allowed = _KEYS[current.name.split()[0]]
            if key not in allowed:
                raise SpecError(lineno, f"unknown key '{key}' in section [{current.name}]")
            value = _parse_value(allowed[key], tokens, lineno)
            if key in _REPEATABLE:
                bucket = current.values.setdefault(key, [])
                if key == "logical":
                    bucket.append(value)
                else:
                    bucket.extend(value)
                current.lines.setdefault(key, lineno)
            else:
                if key in current.values:
                    raise SpecError(lineno, f"duplicate key '{key}' in section [{current.name}]")
                current.values[key] = value
                current.lines[key] = lineno
    except SpecError as exc:
        if path:
            raise SpecError(exc.line, exc.message, path) from None
        raise

    by_name = {s.name: s for s in sections}
    if "inner" not in by_name:
        raise SpecError(None, "missing [inner] section", path)
    outers = {int(s.name.split()[1]): s for s in sections if s.name.startswith("outer")}
    return CodeSpec(by_name["inner"], by_name.get("chain"), outers, path)


def load_spec(path: str | Path) -> CodeSpec:
    p = Path(path)
    return parse_spec(p.read_text(), str(p))


def _check_lengths(section: Section, n: int, spec: CodeSpec) -> None:
    for key in ("generators", "logical"):
        for item in section.get(key, []):
            ops = item if isinstance(item, tuple) else (item,)
            for op in ops:
                if op.n != n:
                    raise SpecError(
                        section.lines[key],
                        f"operator {op} has {op.n} qubits, expected {n}",
                        spec.path,
                    )


def _build_code(section: Section, n: int, spec: CodeSpec, distance: int | None) -> StabilizerCode:
    _check_lengths(section, n, spec)
    gens: list[PauliOperator] = section.get("generators", [])
    pairs = section.get("logical")
    try:
        return StabilizerCode.build(n, gens, pairs, claimed_distance=distance)
    except InvalidCodeError as exc:
        line = section.lines.get("generators", section.line)
        if exc.violations[0].kind.startswith(("logical", "pairing")):
            line = section.lines.get("logical", line)
        raise SpecError(line, f"invalid code in [{section.name}]: {exc}", spec.path) from None


def inner_code(spec: CodeSpec) -> StabilizerCode:
    n = spec.inner.require("n")
    ds = spec.inner.get("distances")
    return _build_code(spec.inner, n, spec, ds[0] if ds else None)


def chain_of(spec: CodeSpec, base: StabilizerCode | None = None) -> SubcodeChain:
    if spec.chain is None:
        raise SpecError(None, "missing [chain] section", spec.path)
    base = base or inner_code(spec)
    sec = spec.chain
    ordering = sec.get("ordering")
    strategy = NestingStrategy(
        ordering=tuple(ordering) if ordering else None,
        swaps=frozenset(sec.get("swaps", [])),
    )
    try:
        return build_chain(base, sec.require("ks"), strategy, spec.inner.get("distances"))
    except ValueError as exc:
        raise SpecError(sec.line, str(exc), spec.path) from None


def outer_codes(spec: CodeSpec) -> list[OuterCodeSpec]:
    levels = sorted(spec.outers)
    if levels != list(range(1, len(levels) + 1)):
        raise SpecError(None, f"outer levels must be numbered 1..m, got {levels}", spec.path)
    result = []
    for level in levels:
        sec = spec.outers[level]
        N, r = sec.require("N"), sec.require("r")
        _check_lengths(sec, N * r, spec)
        try:
            result.append(
                make_outer(
                    level, N, r, sec.get("generators", []), sec.require("D"),
                    K=sec.get("K"), logical_pairs=sec.get("logical"),
                )
            )
        except SpecError:
            raise
        except ValueError as exc:
            raise SpecError(sec.line, str(exc), spec.path) from None
    return result
