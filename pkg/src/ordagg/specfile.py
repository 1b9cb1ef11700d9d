"""Line-oriented spec files describing scales, measures, functions, and
commensurability tables.

Grammar (one block per object; `#` starts a comment; body lines are
indented):

    scale <name> <size>
    rscale <name> <half_size>
    labels <scale> <l0> <l1> ...
    omega <e1> <e2> ...
    measure <name> scale=<M> kind=table|chain-lower|chain-upper|unanimity|co-unanimity
      <subset> <value>        # for unanimity kinds: a single <subset> line
    function <name> scale=<L>
      <element> <value>
    comm <name> from=<M> to=<L>
      <p> <v>                 # empty body: the rank identity

Subsets are written `{}` or `{a,b}` and are whitespace-insensitive.
Values may be labels (e.g. `0.5`, `-0.25`) or explicit `rank:<k>` tokens;
a comm target `<rscale>+` means the positive half of a reflection scale,
a bare `<rscale>` target the whole carrier as a plain chain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .aggregation import CommFn, LatticeFn
from .chains import Chain, ReflChain
from .errors import DomainError, SpecParseError, SpecValidationError
from .measures import (
    GroundSet,
    Measure,
    SetFamily,
    chain_measure,
    co_unanimity,
    unanimity,
)

MEASURE_KINDS = ("table", "chain-lower", "chain-upper", "unanimity", "co-unanimity")

_SUBSET_LINE = re.compile(r"^(\{[^}]*\})\s*(\S+)?\s*$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.]*$")


@dataclass(eq=True)
class SpecFile:
    """A fully validated bundle of named scales, measures, functions, comms."""

    scales: dict[str, Chain | ReflChain] = field(default_factory=dict)
    ground: GroundSet | None = None
    measures: dict[str, Measure] = field(default_factory=dict)
    functions: dict[str, LatticeFn] = field(default_factory=dict)
    comms: dict[str, CommFn] = field(default_factory=dict)


@dataclass
class _Block:
    kind: str
    line: int
    args: list[str]
    body: list[tuple[int, str]] = field(default_factory=list)


def _split_kv(args: list[str], line: int, required: tuple[str, ...]) -> dict[str, str]:
    kv: dict[str, str] = {}
    for a in args:
        if "=" not in a:
            raise SpecParseError(f"expected key=value, got {a!r}", line)
        k, v = a.split("=", 1)
        if k in kv:
            raise SpecParseError(f"duplicate key {k!r}", line)
        kv[k] = v
    for k in required:
        if k not in kv:
            raise SpecParseError(f"missing {k}=...", line)
    for k in kv:
        if k not in required:
            raise SpecParseError(f"unknown key {k!r}", line)
    return kv


def _collect_blocks(text: str) -> list[_Block]:
    blocks: list[_Block] = []
    current: _Block | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line[0] in " \t":
            if current is None:
                raise SpecParseError("indented line outside a block", line_no)
            current.body.append((line_no, line.strip()))
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind not in ("scale", "rscale", "labels", "omega", "measure", "function", "comm"):
            raise SpecParseError(f"unknown directive {kind!r}", line_no)
        current = _Block(kind, line_no, args)
        blocks.append(current)
    return blocks


def _check_name(name: str, line: int) -> str:
    if not _NAME.match(name):
        raise SpecParseError(f"invalid name {name!r}", line)
    return name


def parse_subset(token: str, ground: GroundSet, line: int | None = None) -> int:
    """Resolve a `{a,b}` token to a bitmask."""
    token = "".join(token.split())
    if not (token.startswith("{") and token.endswith("}")):
        raise SpecParseError(f"expected a subset like {{a,b}}, got {token!r}", line)
    inner = token[1:-1]
    if not inner:
        return 0
    try:
        return ground.mask_of(inner.split(","))
    except DomainError as e:
        raise SpecValidationError(str(e), line) from None


def format_subset(mask: int, ground: GroundSet) -> str:
    return ground.format_mask(mask)


def _parse_rank(token: str, scale: Chain | ReflChain, line: int) -> int:
    """Resolve a value token to a rank (signed rank for reflection scales)."""
    if token.startswith("rank:"):
        try:
            k = int(token[5:])
        except ValueError:
            raise SpecParseError(f"bad rank token {token!r}", line) from None
    else:
        k = (
            scale.srank_of_label(token)
            if isinstance(scale, ReflChain)
            else scale.rank_of_label(token)
        )
        if k is None:
            raise SpecValidationError(
                f"value {token!r} is not a label of scale {scale.id!r}", line
            )
    if isinstance(scale, ReflChain):
        if not -scale.half_size <= k <= scale.half_size:
            raise SpecValidationError(f"rank {k} outside scale {scale.id!r}", line)
    elif not 0 <= k < scale.size:
        raise SpecValidationError(f"rank {k} outside scale {scale.id!r}", line)
    return k


def _format_rank(k: int, scale: Chain | ReflChain) -> str:
    return scale.label(k)


class _Builder:
    def __init__(self):
        self.sf = SpecFile()
        self.scale_decls: dict[str, _Block] = {}
        self.label_decls: dict[str, _Block] = {}

    def scale_named(self, name: str, line: int) -> Chain | ReflChain:
        if name not in self.sf.scales:
            raise SpecValidationError(f"unknown scale {name!r}", line)
        return self.sf.scales[name]

    def chain_for_comm_target(self, token: str, line: int) -> Chain:
        if token.endswith("+"):
            scale = self.scale_named(token[:-1], line)
            if not isinstance(scale, ReflChain):
                raise SpecValidationError(
                    f"{token!r} needs a reflection scale", line
                )
            return scale.positive_half()
        scale = self.scale_named(token, line)
        if isinstance(scale, ReflChain):
            return scale.as_chain()
        return scale

    def require_ground(self, line: int) -> GroundSet:
        if self.sf.ground is None:
            raise SpecValidationError("no omega line declares the ground set", line)
        return self.sf.ground


def _build_scales(builder: _Builder, blocks: list[_Block]) -> None:
    labels: dict[str, _Block] = {}
    for b in blocks:
        if b.kind == "labels":
            if len(b.args) < 2:
                raise SpecParseError("labels needs a scale name and labels", b.line)
            name = b.args[0]
            if name in labels:
                raise SpecParseError(f"duplicate labels for scale {name!r}", b.line)
            labels[name] = b
    seen: set[str] = set()
    for b in blocks:
        if b.kind not in ("scale", "rscale"):
            continue
        if len(b.args) != 2:
            raise SpecParseError(f"{b.kind} needs a name and a size", b.line)
        name = _check_name(b.args[0], b.line)
        if name in seen:
            raise SpecParseError(f"duplicate scale name {name!r}", b.line)
        seen.add(name)
        try:
            size = int(b.args[1])
        except ValueError:
            raise SpecParseError(f"bad size {b.args[1]!r}", b.line) from None
        lb = labels.pop(name, None)
        ltuple = tuple(lb.args[1:]) if lb else None
        try:
            if b.kind == "scale":
                builder.sf.scales[name] = Chain(name, size, ltuple)
            else:
                builder.sf.scales[name] = ReflChain(name, size, ltuple)
        except DomainError as e:
            raise SpecValidationError(str(e), (lb or b).line) from None
    if labels:
        stray = next(iter(labels.values()))
        raise SpecValidationError(
            f"labels for undeclared scale {stray.args[0]!r}", stray.line
        )


def _build_ground(builder: _Builder, blocks: list[_Block]) -> None:
    omegas = [b for b in blocks if b.kind == "omega"]
    if len(omegas) > 1:
        raise SpecParseError("duplicate omega line", omegas[1].line)
    if not omegas:
        return
    b = omegas[0]
    if not b.args:
        raise SpecParseError("omega needs at least one element", b.line)
    for name in b.args:
        _check_name(name, b.line)
    try:
        builder.sf.ground = GroundSet(tuple(b.args))
    except DomainError as e:
        raise SpecValidationError(str(e), b.line) from None


def _measure_rows(b: _Block, ground: GroundSet, scale: Chain) -> list[tuple[int, int, int]]:
    rows = []
    for line_no, text in b.body:
        mt = _SUBSET_LINE.match(text)
        if not mt or mt.group(2) is None:
            raise SpecParseError(f"expected `<subset> <value>`, got {text!r}", line_no)
        mask = parse_subset(mt.group(1), ground, line_no)
        rank = _parse_rank(mt.group(2), scale, line_no)
        rows.append((line_no, mask, rank))
    return rows


def _build_measure(builder: _Builder, b: _Block) -> None:
    if len(b.args) < 1:
        raise SpecParseError("measure needs a name", b.line)
    name = _check_name(b.args[0], b.line)
    if name in builder.sf.measures:
        raise SpecParseError(f"duplicate measure name {name!r}", b.line)
    kv = _split_kv(b.args[1:], b.line, ("scale", "kind"))
    if kv["kind"] not in MEASURE_KINDS:
        raise SpecParseError(f"unknown measure kind {kv['kind']!r}", b.line)
    scale = builder.scale_named(kv["scale"], b.line)
    if isinstance(scale, ReflChain):
        raise SpecValidationError("measures take values in a plain scale", b.line)
    ground = builder.require_ground(b.line)
    kind = kv["kind"]
    try:
        if kind in ("unanimity", "co-unanimity"):
            if len(b.body) != 1:
                raise SpecParseError(
                    f"{kind} needs exactly one coalition line", b.line
                )
            line_no, text = b.body[0]
            mt = _SUBSET_LINE.match(text)
            if not mt or mt.group(2) is not None:
                raise SpecParseError(f"expected a single `<subset>`, got {text!r}", line_no)
            coalition = parse_subset(mt.group(1), ground, line_no)
            build = unanimity if kind == "unanimity" else co_unanimity
            builder.sf.measures[name] = build(ground, coalition, scale)
            return
        rows = _measure_rows(b, ground, scale)
        seen: dict[int, int] = {}
        for line_no, mask, rank in rows:
            if mask in seen:
                raise SpecParseError(
                    f"duplicate subset {format_subset(mask, ground)}", line_no
                )
            seen[mask] = rank
        if kind == "table":
            seen.setdefault(0, 0)
            seen.setdefault(ground.full_mask, scale.size - 1)
            family = SetFamily(ground, frozenset(seen))
            builder.sf.measures[name] = Measure(family, scale, seen)
        else:
            sets = list(seen)
            values = [seen[s] for s in sets]
            builder.sf.measures[name] = chain_measure(
                ground, scale, sets, values, "lower" if kind == "chain-lower" else "upper"
            )
    except DomainError as e:
        raise SpecValidationError(f"measure {name!r}: {e}", b.line) from None


def _build_function(builder: _Builder, b: _Block) -> None:
    if len(b.args) < 1:
        raise SpecParseError("function needs a name", b.line)
    name = _check_name(b.args[0], b.line)
    if name in builder.sf.functions:
        raise SpecParseError(f"duplicate function name {name!r}", b.line)
    kv = _split_kv(b.args[1:], b.line, ("scale",))
    scale = builder.scale_named(kv["scale"], b.line)
    ground = builder.require_ground(b.line)
    values: dict[int, int] = {}
    for line_no, text in b.body:
        parts = text.split()
        if len(parts) != 2:
            raise SpecParseError(f"expected `<element> <value>`, got {text!r}", line_no)
        try:
            idx = ground.index(parts[0])
        except DomainError as e:
            raise SpecValidationError(str(e), line_no) from None
        if idx in values:
            raise SpecParseError(f"duplicate element {parts[0]!r}", line_no)
        values[idx] = _parse_rank(parts[1], scale, line_no)
    if len(values) != ground.size:
        missing = [e for i, e in enumerate(ground.elements) if i not in values]
        raise SpecValidationError(
            f"function {name!r} is missing elements: {', '.join(missing)}", b.line
        )
    try:
        builder.sf.functions[name] = LatticeFn(
            ground, scale, tuple(values[i] for i in range(ground.size))
        )
    except DomainError as e:
        raise SpecValidationError(f"function {name!r}: {e}", b.line) from None


def _build_comm(builder: _Builder, b: _Block) -> None:
    if len(b.args) < 1:
        raise SpecParseError("comm needs a name", b.line)
    name = _check_name(b.args[0], b.line)
    if name in builder.sf.comms:
        raise SpecParseError(f"duplicate comm name {name!r}", b.line)
    kv = _split_kv(b.args[1:], b.line, ("from", "to"))
    src = builder.scale_named(kv["from"], b.line)
    if isinstance(src, ReflChain):
        raise SpecValidationError("comm source must be a plain scale", b.line)
    dst = builder.chain_for_comm_target(kv["to"], b.line)
    try:
        if not b.body:
            builder.sf.comms[name] = CommFn.identity(src, dst)
            return
        values: dict[int, int] = {}
        for line_no, text in b.body:
            parts = text.split()
            if len(parts) != 2:
                raise SpecParseError(f"expected `<p> <value>`, got {text!r}", line_no)
            p = _parse_rank(parts[0], src, line_no)
            if p in values:
                raise SpecParseError(f"duplicate source point {parts[0]!r}", line_no)
            values[p] = _parse_rank(parts[1], dst, line_no)
        if len(values) != src.size:
            raise SpecValidationError(f"comm {name!r} must be total on {src.id!r}", b.line)
        builder.sf.comms[name] = CommFn(src, dst, tuple(values[p] for p in range(src.size)))
    except DomainError as e:
        raise SpecValidationError(f"comm {name!r}: {e}", b.line) from None


def parse(text: str) -> SpecFile:
    """Parse and fully validate a spec file."""
    blocks = _collect_blocks(text)
    for b in blocks:
        if b.kind in ("scale", "rscale", "labels", "omega") and b.body:
            raise SpecParseError(f"{b.kind} does not take indented lines", b.body[0][0])
    builder = _Builder()
    _build_scales(builder, blocks)
    _build_ground(builder, blocks)
    for b in blocks:
        if b.kind == "measure":
            _build_measure(builder, b)
        elif b.kind == "function":
            _build_function(builder, b)
        elif b.kind == "comm":
            _build_comm(builder, b)
    return builder.sf


def _comm_target_token(sf: SpecFile, dst: Chain) -> str:
    for name, scale in sf.scales.items():
        if isinstance(scale, ReflChain):
            if dst == scale.positive_half():
                return name + "+"
            if dst == scale.as_chain():
                return name
        elif dst == scale:
            return name
    raise DomainError(f"comm target {dst.id!r} is not derived from a declared scale")


def format_specfile(sf: SpecFile) -> str:
    """Canonical text form; parsing it back reproduces the spec file."""
    out: list[str] = []
    for name, scale in sf.scales.items():
        if isinstance(scale, ReflChain):
            out.append(f"rscale {name} {scale.half_size}")
        else:
            out.append(f"scale {name} {scale.size}")
        if scale.labels is not None:
            out.append(f"labels {name} " + " ".join(scale.labels))
    if sf.ground is not None:
        out.append("omega " + " ".join(sf.ground.elements))
    for name, m in sf.measures.items():
        scale_name = m.scale.id
        out.append(f"measure {name} scale={scale_name} kind=table")
        for mask in sorted(m.values, key=lambda a: (a.bit_count(), a)):
            out.append(
                f"  {format_subset(mask, m.ground)} {_format_rank(m.values[mask], m.scale)}"
            )
    for name, f in sf.functions.items():
        out.append(f"function {name} scale={f.scale.id}")
        for i, e in enumerate(f.ground.elements):
            out.append(f"  {e} {_format_rank(f.values[i], f.scale)}")
    for name, c in sf.comms.items():
        out.append(f"comm {name} from={c.src.id} to={_comm_target_token(sf, c.dst)}")
        for p in range(c.src.size):
            out.append(f"  {_format_rank(p, c.src)} {_format_rank(c.values[p], c.dst)}")
    return "\n".join(out) + "\n"
