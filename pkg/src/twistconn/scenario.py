"""Scenario files: the textual configuration for every CLI run.

Format: top-level ``key: value`` lines plus ``[section]`` blocks.  Matrix
sections (``[S]``, ``[S_alt]``, ``[T]``) hold one row of rational entries
per line; potential and swap sections (``[potential_E]``, ``[potential_F]``,
``[phi]``, ``[psi]``) hold ``(k,l): <form expression>`` entries with
1-based indices.  ``#`` starts a comment.  Example::

    q: 2
    m: 1
    n: 2
    max_exponent: 3
    max_degree: 2
    seed: 0
    checks: axioms, hypotheses, leibniz, theorem

    [potential_E]
    (1,1): x dx

    [S]
    1 0
    0 1

All rationals are exact ("3/2"); potentials must be homogeneous 1-forms;
matrices must be invertible.  Violations raise ScenarioError with the
offending line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .forms import Caps, Form, parse_form
from .rationals import Matrix, identity, mat_inv, parse_rational

KNOWN_CHECKS = ("axioms", "hypotheses", "leibniz", "theorem", "flatness",
                "independence", "curvature", "report", "bimodule")

_SECTION_RE = re.compile(r"^\[([A-Za-z_]+)\]$")
_ENTRY_RE = re.compile(r"^\((\d+)\s*,\s*(\d+)\)\s*:\s*(.*)$")

_MATRIX_SECTIONS = {"S": "s_matrix", "S_alt": "s_alt", "T": "t_matrix"}
_FORM_SECTIONS = {"potential_E": ("x", "potential_e"),
                  "potential_F": ("y", "potential_f"),
                  "phi": ("x", "phi"),
                  "psi": ("y", "psi")}


class ScenarioError(ValueError):
    """Raised on malformed or invalid scenario input."""


@dataclass
class Scenario:
    q: Fraction = Fraction(2)
    m: int = 1
    n: int = 1
    caps: Caps = Caps(4, 3)
    seed: int = 0
    checks: list[str] = field(default_factory=lambda: [
        "axioms", "hypotheses", "leibniz", "theorem"])
    potential_e: dict[tuple[int, int], Form] = field(default_factory=dict)
    potential_f: dict[tuple[int, int], Form] = field(default_factory=dict)
    s_matrix: Matrix | None = None
    s_alt: Matrix | None = None
    t_matrix: Matrix | None = None
    phi: dict[tuple[int, int], Form] | None = None
    psi: dict[tuple[int, int], Form] | None = None
    f_exponents: list[int] | None = None
    remark_power: int = 2

    def potential_matrix(self, which: str) -> list[list[Form]]:
        gen, rank = ("x", self.m) if which == "e" else ("y", self.n)
        entries = self.potential_e if which == "e" else self.potential_f
        mat = [[Form.zero(gen) for _ in range(rank)] for _ in range(rank)]
        for (k, l), form in entries.items():
            mat[k][l] = form
        return mat

    def swap_matrix(self, which: str) -> list[list[Form]] | None:
        entries = self.phi if which == "e" else self.psi
        if entries is None:
            return None
        gen, rank = ("x", self.m) if which == "e" else ("y", self.n)
        mat = [[Form.zero(gen) for _ in range(rank)] for _ in range(rank)]
        for (k, l), form in entries.items():
            mat[k][l] = form
        return mat

    @property
    def is_grassmann(self) -> bool:
        return not self.potential_e and not self.potential_f

    def config_echo(self) -> dict:
        echo = {
            "q": str(self.q),
            "m": self.m,
            "n": self.n,
            "max_exponent": self.caps.max_exponent,
            "max_degree": self.caps.max_degree,
            "seed": self.seed,
            "checks": list(self.checks),
            "potential_E": {f"({k + 1},{l + 1})": str(f)
                            for (k, l), f in sorted(self.potential_e.items())},
            "potential_F": {f"({k + 1},{l + 1})": str(f)
                            for (k, l), f in sorted(self.potential_f.items())},
        }
        for label, mat in (("S", self.s_matrix), ("S_alt", self.s_alt),
                           ("T", self.t_matrix)):
            if mat is not None:
                echo[label] = [[str(v) for v in row] for row in mat]
        for label, entries in (("phi", self.phi), ("psi", self.psi)):
            if entries is not None:
                echo[label] = {f"({k + 1},{l + 1})": str(f)
                               for (k, l), f in sorted(entries.items())}
        return echo


def _parse_matrix_rows(rows: list[tuple[int, str]], label: str) -> Matrix:
    mat = []
    for lineno, row in rows:
        try:
            mat.append([parse_rational(tok) for tok in row.split()])
        except ValueError as exc:
            raise ScenarioError(f"line {lineno}: {label}: {exc}") from None
    if not mat:
        raise ScenarioError(f"{label} section is empty")
    width = len(mat[0])
    if any(len(r) != width for r in mat) or width != len(mat):
        raise ScenarioError(f"{label} must be square")
    return tuple(tuple(v for v in row) for row in mat)


def load_scenario(text: str) -> Scenario:
    """Parse and validate scenario text."""
    top: dict[str, tuple[int, str]] = {}
    matrix_rows: dict[str, list[tuple[int, str]]] = {}
    form_entries: dict[str, list[tuple[int, int, int, str]]] = {}
    section: str | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sec = _SECTION_RE.match(line)
        if sec:
            section = sec.group(1)
            if section not in _MATRIX_SECTIONS and section not in _FORM_SECTIONS:
                raise ScenarioError(f"line {lineno}: unknown section [{section}]")
            matrix_rows.setdefault(section, [])
            form_entries.setdefault(section, [])
            continue
        if section is None:
            if ":" not in line:
                raise ScenarioError(f"line {lineno}: expected 'key: value'")
            key, value = (part.strip() for part in line.split(":", 1))
            top[key] = (lineno, value)
        elif section in _MATRIX_SECTIONS:
            matrix_rows[section].append((lineno, line))
        else:
            entry = _ENTRY_RE.match(line)
            if not entry:
                raise ScenarioError(
                    f"line {lineno}: expected '(k,l): <form>' in [{section}]")
            form_entries[section].append(
                (lineno, int(entry.group(1)), int(entry.group(2)),
                 entry.group(3).strip()))

    scenario = Scenario()

    def take_int(key: str, default: int, minimum: int) -> int:
        if key not in top:
            return default
        lineno, value = top[key]
        try:
            out = int(value)
        except ValueError:
            raise ScenarioError(f"line {lineno}: {key} must be an integer") from None
        if out < minimum:
            raise ScenarioError(f"line {lineno}: {key} must be >= {minimum}")
        return out

    if "q" in top:
        lineno, value = top["q"]
        try:
            scenario.q = parse_rational(value)
        except ValueError as exc:
            raise ScenarioError(f"line {lineno}: {exc}") from None
        if not scenario.q:
            raise ScenarioError(f"line {lineno}: q must be nonzero")
    scenario.m = take_int("m", 1, 1)
    scenario.n = take_int("n", 1, 1)
    scenario.caps = Caps(take_int("max_exponent", 4, 1),
                         take_int("max_degree", 3, 1))
    scenario.seed = take_int("seed", 0, 0)
    scenario.remark_power = take_int("remark_power", 2, 1)
    if "checks" in top:
        lineno, value = top["checks"]
        checks = [c.strip() for c in value.replace(",", " ").split() if c.strip()]
        for c in checks:
            if c not in KNOWN_CHECKS:
                raise ScenarioError(f"line {lineno}: unknown check {c!r} "
                                    f"(known: {', '.join(KNOWN_CHECKS)})")
        scenario.checks = checks
    if "f_exponents" in top:
        lineno, value = top["f_exponents"]
        try:
            scenario.f_exponents = [int(v) for v in value.replace(",", " ").split()]
        except ValueError:
            raise ScenarioError(f"line {lineno}: f_exponents must be integers") \
                from None
    unknown = set(top) - {"q", "m", "n", "max_exponent", "max_degree", "seed",
                          "checks", "f_exponents", "remark_power"}
    if unknown:
        raise ScenarioError(f"unknown keys: {', '.join(sorted(unknown))}")

    for label, attr in _MATRIX_SECTIONS.items():
        if label in matrix_rows:
            mat = _parse_matrix_rows(matrix_rows[label], label)
            expected = scenario.n if label.startswith("S") else scenario.m
            if len(mat) != expected:
                raise ScenarioError(f"{label} must be {expected}x{expected}")
            try:
                mat_inv(mat)
            except ValueError:
                raise ScenarioError(f"{label} not invertible") from None
            setattr(scenario, attr, mat)

    for label, (gen, attr) in _FORM_SECTIONS.items():
        if label not in form_entries:
            continue
        rank = scenario.m if gen == "x" else scenario.n
        entries: dict[tuple[int, int], Form] = {}
        for lineno, k, l, expr in form_entries[label]:
            if not (1 <= k <= rank and 1 <= l <= rank):
                raise ScenarioError(f"line {lineno}: index ({k},{l}) out of "
                                    f"range for rank {rank}")
            try:
                form = parse_form(gen, expr)
            except ValueError as exc:
                raise ScenarioError(f"line {lineno}: {exc}") from None
            if not form.is_zero and not form.is_homogeneous(1):
                raise ScenarioError(
                    f"line {lineno}: entry ({k},{l}) must be a 1-form")
            entries[(k - 1, l - 1)] = form
        if attr in ("phi", "psi"):
            setattr(scenario, attr, entries)
        else:
            setattr(scenario, attr, {kl: f for kl, f in entries.items()
                                     if not f.is_zero})

    if scenario.f_exponents is not None and len(scenario.f_exponents) != scenario.n:
        raise ScenarioError("f_exponents must list one exponent per f-slot")
    return scenario


def load_scenario_file(path: str) -> Scenario:
    with open(path, "r", encoding="utf-8") as handle:
        return load_scenario(handle.read())


def default_matrix(mat: Matrix | None, rank: int) -> Matrix:
    return mat if mat is not None else identity(rank)
