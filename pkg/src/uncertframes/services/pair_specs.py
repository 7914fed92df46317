"""
Resolve the short textual specifiers accepted on the command line into
frame pairs and vectors.

Pairs:    identity:d | dft:n | random:d:seed[:m] | file:PATH
Vectors:  comb:n:spacing[:offset] | spike:n:index | ones:n | random:n:seed
          | a literal comma list such as "1,0,1j,2-0.5j"
"""

from typing import List, Optional

import numpy as np

from uncertframes.components.constructions import (
    DEFAULT_COND_CAP,
    DEFAULT_MAX_RESIDUAL,
    DEFAULT_MAX_RETRIES,
    constant,
    dft_pair,
    dirac_comb,
    identity_pair,
    random_biorthogonal_pair,
    spike,
)
from uncertframes.components.frames import FramePair
from uncertframes.config.config_schema import ConstructionConfig
from uncertframes.services.matrix_io import read_pair
from uncertframes.utils.exceptions import InputError


def _ints(spec: str, fields: List[str], low: int, high: int) -> List[int]:
    if not low <= len(fields) <= high:
        raise InputError(f"specifier {spec!r} expects {low} to {high} integer fields")
    try:
        return [int(field) for field in fields]
    except ValueError as e:
        raise InputError(f"specifier {spec!r} has a non-integer field") from e


def parse_pair_spec(spec: str, constructions: Optional[ConstructionConfig] = None) -> FramePair:
    kind, _, rest = spec.strip().partition(":")
    if kind == "file":
        if not rest:
            raise InputError("file specifier needs a path, e.g. file:pair.csv")
        return read_pair(rest, label=spec)

    fields = rest.split(":") if rest else []
    if kind == "identity":
        (d,) = _ints(spec, fields, 1, 1)
        return identity_pair(d)
    if kind == "dft":
        (n,) = _ints(spec, fields, 1, 1)
        return dft_pair(n)
    if kind == "random":
        values = _ints(spec, fields, 2, 3)
        d, seed = values[:2]
        m = values[2] if len(values) == 3 else None
        return random_biorthogonal_pair(
            d,
            m=m,
            seed=seed,
            cond_cap=constructions.cond_cap if constructions else DEFAULT_COND_CAP,
            max_retries=constructions.max_retries if constructions else DEFAULT_MAX_RETRIES,
            max_residual=constructions.max_residual if constructions else DEFAULT_MAX_RESIDUAL,
        )
    raise InputError(
        f"unknown pair specifier {spec!r}; use identity:d, dft:n, random:d:seed[:m] or file:PATH"
    )


def _literal_vector(spec: str) -> np.ndarray:
    try:
        values = [complex(token.strip().replace(" ", "")) for token in spec.split(",")]
    except ValueError as e:
        raise InputError(f"cannot parse vector {spec!r} as a comma list of complex numbers") from e
    return np.array(values, dtype=np.complex128)


def parse_vector_spec(spec: str) -> np.ndarray:
    kind, _, rest = spec.strip().partition(":")
    fields = rest.split(":") if rest else []

    if kind == "comb":
        values = _ints(spec, fields, 2, 3)
        return dirac_comb(*values)
    if kind == "spike":
        n, index = _ints(spec, fields, 2, 2)
        return spike(n, index)
    if kind == "ones":
        (n,) = _ints(spec, fields, 1, 1)
        return constant(n)
    if kind == "random":
        n, seed = _ints(spec, fields, 2, 2)
        if n < 1:
            raise InputError(f"vector length must be positive, got {n}")
        rng = np.random.default_rng(seed)
        return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2.0)
    if rest:
        raise InputError(
            f"unknown vector specifier {spec!r}; use comb:n:s[:o], spike:n:i, ones:n, "
            f"random:n:seed or a comma list"
        )
    return _literal_vector(spec)
