"""OpenQASM 2.0 subset reader and writer.

Supported programs: an optional ``OPENQASM 2.0;`` header, an optional
``include "qelib1.inc";``, exactly one ``qreg``, at most one ``creg``,
then gate statements from the closed vocabulary in `circuits`, plus
``measure`` (with ``->``) and ``barrier``.  ``//`` comments are ignored,
except that a leading ``// circuit: <name>`` names the parsed circuit so
emit/parse round-trips preserve identity.

Angle arguments accept literals and simple ``pi`` arithmetic
(``pi/2``, ``-3*pi/4``, ...).  The writer always emits plain literals
with 17 significant digits, which reproduces any float exactly.
"""

from __future__ import annotations

import re

from .circuits import GATE_KINDS, Circuit, Gate

_PI = 3.141592653589793


class QasmError(ValueError):
    """Parse failure, carrying the 1-based source line and column."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>//[^\n]*)
      | (?P<real>(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
      | (?P<int>\d+)
      | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<string>"[^"\n]*")
      | (?P<arrow>->)
      | (?P<sym>[;,\[\]()+\-*/])
    """,
    re.VERBOSE,
)

_NAME_RE = re.compile(r"^\s*//\s*circuit:\s*(\S.*?)\s*$", re.MULTILINE)


def _tokenize(text: str) -> list[tuple[str, str, int, int]]:
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise QasmError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append((kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0
        self.qreg: tuple[str, int] | None = None
        self.creg: tuple[str, int] | None = None
        self.gates: list[Gate] = []

    # token plumbing ----------------------------------------------------

    def _peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def _next(self):
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else ("", "", 1, 1)
            raise QasmError("unexpected end of input", last[2], last[3])
        self.pos += 1
        return tok

    def _expect(self, kind: str, value: str | None = None):
        tok = self._next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise QasmError(f"expected {want!r}, got {tok[1]!r}", tok[2], tok[3])
        return tok

    def _fail(self, message: str, tok=None):
        if tok is None:
            tok = self._peek() or self.tokens[-1]
        raise QasmError(message, tok[2], tok[3])

    # grammar -----------------------------------------------------------

    def parse(self) -> tuple[int, list[Gate]]:
        tok = self._peek()
        if tok is not None and tok[0] == "id" and tok[1] == "OPENQASM":
            self._next()
            version = self._next()
            if version[1] != "2.0":
                self._fail(f"unsupported version {version[1]}", version)
            self._expect("sym", ";")
        tok = self._peek()
        if tok is not None and tok[0] == "id" and tok[1] == "include":
            self._next()
            self._expect("string")
            self._expect("sym", ";")
        while self._peek() is not None:
            self._statement()
        if self.qreg is None:
            last = self.tokens[-1] if self.tokens else ("", "", 1, 1)
            raise QasmError("program declares no qreg", last[2], last[3])
        return self.qreg[1], self.gates

    def _statement(self) -> None:
        tok = self._expect("id")
        word = tok[1]
        if word == "qreg":
            if self.qreg is not None:
                self._fail("only one qreg is supported", tok)
            self.qreg = self._register_decl()
        elif word == "creg":
            if self.creg is not None:
                self._fail("only one creg is supported", tok)
            self.creg = self._register_decl()
        elif word == "measure":
            self._measure(tok)
        elif word == "barrier":
            self._barrier(tok)
        else:
            self._gate(tok)

    def _register_decl(self) -> tuple[str, int]:
        name = self._expect("id")[1]
        self._expect("sym", "[")
        size_tok = self._expect("int")
        self._expect("sym", "]")
        self._expect("sym", ";")
        nbits = int(size_tok[1])
        if nbits < 1:
            self._fail("register size must be positive", size_tok)
        return name, nbits

    def _require_qreg(self, tok) -> tuple[str, int]:
        if self.qreg is None:
            self._fail("statement before qreg declaration", tok)
        return self.qreg

    def _qubit(self) -> int:
        name_tok = self._expect("id")
        reg_name, reg_size = self.qreg  # caller checked _require_qreg
        if name_tok[1] != reg_name:
            self._fail(f"unknown register {name_tok[1]!r}", name_tok)
        self._expect("sym", "[")
        idx_tok = self._expect("int")
        self._expect("sym", "]")
        index = int(idx_tok[1])
        if index >= reg_size:
            self._fail(
                f"qubit index {index} out of range for {reg_name}[{reg_size}]",
                idx_tok,
            )
        return index

    def _gate(self, tok) -> None:
        kind = tok[1]
        if kind not in GATE_KINDS:
            self._fail(f"unsupported gate {kind!r}", tok)
        self._require_qreg(tok)
        params: list[float] = []
        nxt = self._peek()
        if nxt is not None and nxt[0] == "sym" and nxt[1] == "(":
            self._next()
            params.append(self._expr())
            while self._peek() and self._peek()[1] == ",":
                self._next()
                params.append(self._expr())
            self._expect("sym", ")")
        qubits = [self._qubit()]
        while self._peek() and self._peek()[1] == ",":
            self._next()
            qubits.append(self._qubit())
        self._expect("sym", ";")
        try:
            self.gates.append(Gate(kind, tuple(qubits), tuple(params)))
        except ValueError as exc:
            self._fail(str(exc), tok)

    def _measure(self, tok) -> None:
        reg_name, reg_size = self._require_qreg(tok)
        if self.creg is None:
            self._fail("measure requires a creg declaration", tok)
        targets = self._reg_or_qubit(reg_name, reg_size)
        self._expect("arrow")
        # Classical side: same shape, indices not retained in the model.
        cname, csize = self.creg
        self._reg_or_qubit(cname, csize)
        self._expect("sym", ";")
        for q in targets:
            self.gates.append(Gate("measure", (q,)))

    def _barrier(self, tok) -> None:
        reg_name, reg_size = self._require_qreg(tok)
        qubits = self._reg_or_qubit(reg_name, reg_size)
        while self._peek() and self._peek()[1] == ",":
            self._next()
            qubits.extend(self._reg_or_qubit(reg_name, reg_size))
        self._expect("sym", ";")
        try:
            self.gates.append(Gate("barrier", tuple(qubits)))
        except ValueError as exc:
            self._fail(str(exc), tok)

    def _reg_or_qubit(self, reg_name: str, reg_size: int) -> list[int]:
        name_tok = self._expect("id")
        if name_tok[1] != reg_name:
            self._fail(f"unknown register {name_tok[1]!r}", name_tok)
        nxt = self._peek()
        if nxt is not None and nxt[0] == "sym" and nxt[1] == "[":
            self._next()
            idx_tok = self._expect("int")
            self._expect("sym", "]")
            index = int(idx_tok[1])
            if index >= reg_size:
                self._fail(
                    f"index {index} out of range for {reg_name}[{reg_size}]",
                    idx_tok,
                )
            return [index]
        return list(range(reg_size))

    # angle expressions: + - * / over literals, pi, and parentheses -----

    def _expr(self) -> float:
        value = self._term()
        while self._peek() and self._peek()[1] in ("+", "-"):
            op = self._next()[1]
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> float:
        value = self._factor()
        while self._peek() and self._peek()[1] in ("*", "/"):
            op = self._next()[1]
            rhs = self._factor()
            if op == "/":
                if rhs == 0:
                    self._fail("division by zero in angle expression")
                value = value / rhs
            else:
                value = value * rhs
        return value

    def _factor(self) -> float:
        tok = self._next()
        if tok[0] == "sym" and tok[1] == "-":
            return -self._factor()
        if tok[0] == "sym" and tok[1] == "+":
            return self._factor()
        if tok[0] == "sym" and tok[1] == "(":
            value = self._expr()
            self._expect("sym", ")")
            return value
        if tok[0] in ("real", "int"):
            return float(tok[1])
        if tok[0] == "id" and tok[1] == "pi":
            return _PI
        raise QasmError(f"bad angle expression near {tok[1]!r}", tok[2], tok[3])


def parse_qasm(text: str) -> Circuit:
    """Parse a supported-subset program into a Circuit."""
    num_qubits, gates = _Parser(text).parse()
    m = _NAME_RE.search(text)
    name = m.group(1) if m else "circuit"
    return Circuit(name=name, num_qubits=num_qubits, gates=tuple(gates))


def _fmt_angle(x: float) -> str:
    return format(x, ".17g")


def emit_qasm(circuit: Circuit) -> str:
    """Render a Circuit back to source, one statement per line."""
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"// circuit: {circuit.name}",
        f"qreg q[{circuit.num_qubits}];",
    ]
    if any(g.kind == "measure" for g in circuit.gates):
        lines.append(f"creg c[{circuit.num_qubits}];")
    for g in circuit.gates:
        qubits = ",".join(f"q[{q}]" for q in g.qubits)
        if g.kind == "measure":
            lines.append(f"measure q[{g.qubits[0]}] -> c[{g.qubits[0]}];")
        elif g.params:
            args = ",".join(_fmt_angle(p) for p in g.params)
            lines.append(f"{g.kind}({args}) {qubits};")
        else:
            lines.append(f"{g.kind} {qubits};")
    return "\n".join(lines) + "\n"
