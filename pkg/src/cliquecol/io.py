"""Readers and writers for edge lists, point files, colourings and sweep configs."""
from __future__ import annotations

import ast
import json
import math
import operator
import re
from pathlib import Path

import numpy as np

from .budget import DEFAULT_BUDGET, Budget
from .exceptions import ParseError
from .experiments import SweepConfig
from .graph import Colouring, Graph, PointSet


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` with 0-based vertices."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty edge list")
    try:
        n, m = map(int, lines[0].split())
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"bad edge list: {exc}") from None
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative")
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise ParseError(f"expected {m} lines of 'u v', got {len(edges)}")
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if g.m != m:
        raise ParseError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def parse_points(text: str, radius: float = 1.0) -> PointSet:
    """Header ``dim=d``, then one point per line as ``d`` comma-separated numbers."""
    lines = _lines(text)
    if not lines or not re.fullmatch(r"dim\s*=\s*\d+", lines[0]):
        raise ParseError("points file must start with 'dim=<d>'")
    dim = int(lines[0].split("=")[1])
    if dim < 1:
        raise ParseError("dim must be at least 1")
    rows = []
    for k, ln in enumerate(lines[1:], start=2):
        try:
            row = [float(x) for x in ln.split(",")]
        except ValueError:
            raise ParseError(f"line {k}: not a list of numbers") from None
        if len(row) != dim:
            raise ParseError(f"line {k}: expected {dim} coordinates, got {len(row)}")
        rows.append(row)
    try:
        return PointSet(np.array(rows, dtype=float).reshape(len(rows), dim), radius)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_points(points) -> str:
    pts = np.asarray(points, dtype=float)
    body = "".join(",".join(repr(float(x)) for x in p) + "\n" for p in pts)
    return f"dim={pts.shape[1]}\n" + body


def colouring_to_json(c: Colouring) -> str:
    return json.dumps(c.to_json_dict())


def parse_colouring(text: str) -> Colouring:
    try:
        obj = json.loads(text)
        colours = obj["colours"]
    except (ValueError, KeyError, TypeError):
        raise ParseError("colouring must be a JSON object with a 'colours' list") from None
    if not isinstance(colours, list) or not all(isinstance(c, int) and c >= 0 for c in colours):
        raise ParseError("colours must be non-negative integers")
    c = Colouring(tuple(colours))
    if "palette" in obj and obj["palette"] != c.palette_size:
        raise ParseError(f"palette {obj['palette']} does not match {c.palette_size} distinct colours")
    return c


# -- regime expressions --------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_FUNCS = {"log": math.log, "sqrt": math.sqrt, "exp": math.exp}
_CONSTS = {"pi": math.pi, "e": math.e}


def eval_regime(expr: str, n: float, c: float = 1.0) -> float:
    """Evaluate an expression such as ``c*n^{-1/4}`` or ``0.4*sqrt(log(n))``.

    Allowed: numbers, ``n``, ``c``, ``pi``, ``e``, ``+ - * / ^``, braces or
    parentheses, and ``log``, ``sqrt``, ``exp``. ``^`` is exponentiation.
    """
    src = expr.replace("^", "**").replace("{", "(").replace("}", ")")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError:
        raise ParseError(f"invalid regime expression {expr!r}") from None
    names = {"n": float(n), "c": float(c), **_CONSTS}

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id in _FUNCS and len(node.args) == 1 and not node.keywords):
            return _FUNCS[node.func.id](ev(node.args[0]))
        raise ParseError(f"unsupported element in regime expression {expr!r}")

    try:
        value = ev(tree)
    except (ArithmeticError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"cannot evaluate {expr!r}: {exc}") from None
    if isinstance(value, complex) or not math.isfinite(value) or value <= 0:
        raise ParseError(f"regime expression {expr!r} must give a positive finite radius")
    return value


_INT_KEYS = ("n", "trials", "seed", "budget")
_KNOWN = set(_INT_KEYS) | {"r", "c", "model", "regime", "label"}


def _config_from_mapping(d: dict) -> SweepConfig:
    unknown = set(d) - _KNOWN
    if unknown:
        raise ParseError(f"unknown config keys {sorted(unknown)}")
    if "n" not in d or "r" not in d:
        raise ParseError("config needs n and r")
    try:
        ints = {k: int(d[k]) for k in _INT_KEYS if k in d}
        c = float(d.get("c", 1.0))
    except (TypeError, ValueError):
        raise ParseError("n, trials, seed and budget must be integers; c a number") from None
    n = ints["n"]
    r_raw = d["r"]
    r = float(r_raw) if isinstance(r_raw, (int, float)) else eval_regime(str(r_raw), n, c)
    budget = Budget(max_cliques=ints["budget"]) if "budget" in ints else DEFAULT_BUDGET
    label = str(d.get("regime", d.get("label", "" if isinstance(r_raw, (int, float)) else r_raw)))
    try:
        return SweepConfig(n=n, r=r, model=str(d.get("model", "uniform")),
                           trials=ints.get("trials", 100), seed=ints.get("seed", 0),
                           budget=budget, regime=label)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_sweep_config(text: str) -> list[SweepConfig]:
    """JSON (an object or a list of objects), or blank-line separated ``key=value`` blocks."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        try:
            obj = json.loads(stripped)
        except ValueError as exc:
            raise ParseError(f"bad JSON config: {exc}") from None
        items = obj if isinstance(obj, list) else [obj]
        if not all(isinstance(i, dict) for i in items):
            raise ParseError("JSON config must hold objects")
        return [_config_from_mapping(i) for i in items]

    configs, block = [], {}
    for raw in text.splitlines() + [""]:
        line = raw.split("#", 1)[0].strip()
        if not line:
            if block:
                configs.append(_config_from_mapping(block))
                block = {}
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {line!r}")
        value = value.strip()
        try:
            block[key.strip()] = float(value) if key.strip() == "r" else value
        except ValueError:
            block[key.strip()] = value
    if not configs:
        raise ParseError("config holds no entries")
    return configs


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
