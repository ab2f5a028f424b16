"""JSON file formats for configs, codewords, downloads, and messages.

Every file carries "format": 1. Field elements are canonical integers.
Config files may omit defaultable fields (omega, A, modulus, zeta for the
trace scheme); files written by this module are always fully explicit so a
run can be reproduced without knowing the defaults.
"""

import json
import sys

from .arraycode import DownloadBundle
from .frs_scheme import FrsConfig, frs_make_config
from .rationals import as_fraction
from .trace_scheme import TsConfig, ts_make_config

FORMAT = 1


class FormatError(ValueError):
    """A file failed structural validation before any math ran."""


def _require(cond, message):
    if not cond:
        raise FormatError(message)


def _check_format(data, what):
    _require(isinstance(data, dict), f"{what} must be a JSON object")
    version = data.get("format", FORMAT)
    _require(version == FORMAT,
             f"{what} has format {version!r}, this build reads format {FORMAT}")


def _int_list(value, what):
    _require(isinstance(value, list) and
             all(isinstance(v, int) and not isinstance(v, bool) for v in value),
             f"{what} must be a list of integers")
    return [int(v) for v in value]


def config_to_dict(cfg):
    if isinstance(cfg, TsConfig):
        return {
            "format": FORMAT,
            "scheme": "ts",
            "q": cfg.base.q,
            "n": cfg.n,
            "k": cfg.k,
            "l": cfg.l,
            "m": cfg.m,
            "omega": list(cfg.omega),
            "A": [list(s) for s in cfg.subsets],
            "modulus": list(cfg.ext.modulus),
            "zeta": list(cfg.basis.zeta),
        }
    if isinstance(cfg, FrsConfig):
        return {
            "format": FORMAT,
            "scheme": "frs",
            "p": cfg.field.q,
            "gamma": cfg.gamma,
            "n": cfg.n,
            "k": cfg.k,
            "l": cfg.l,
            "alpha": str(cfg.alpha),
        }
    raise TypeError(f"unsupported config type {type(cfg).__name__}")


def config_from_dict(data):
    _check_format(data, "config file")
    scheme = data.get("scheme")
    _require(scheme in ("ts", "frs"),
             f"config scheme must be 'ts' or 'frs', got {scheme!r}")
    if scheme == "ts":
        for key in ("q", "n", "k", "l", "m"):
            _require(isinstance(data.get(key), int),
                     f"ts config needs integer field {key!r}")
        omega = data.get("omega")
        subsets = data.get("A")
        modulus = data.get("modulus")
        zeta = data.get("zeta")
        return ts_make_config(
            data["q"], data["n"], data["k"], data["l"], data["m"],
            omega=None if omega is None else _int_list(omega, "omega"),
            subsets=None if subsets is None else
            tuple(_int_list(s, "A entry") for s in subsets),
            modulus=None if modulus is None else _int_list(modulus, "modulus"),
            zeta=None if zeta is None else _int_list(zeta, "zeta"),
        )
    for key in ("n", "k", "l"):
        _require(isinstance(data.get(key), int),
                 f"frs config needs integer field {key!r}")
    _require("alpha" in data, "frs config needs field 'alpha'")
    try:
        alpha = as_fraction(data["alpha"])
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad alpha value: {exc}") from exc
    return frs_make_config(data["n"], data["k"], data["l"], alpha,
                           p=data.get("p"), gamma=data.get("gamma"))


def codeword_to_dict(scheme, columns):
    return {
        "format": FORMAT,
        "scheme": scheme,
        "columns": [list(c) for c in columns],
    }


def codeword_from_dict(data, expected_scheme=None):
    _check_format(data, "codeword file")
    scheme = data.get("scheme")
    if expected_scheme is not None:
        _require(scheme == expected_scheme,
                 f"codeword file is for scheme {scheme!r}, expected "
                 f"{expected_scheme!r}")
    columns = data.get("columns")
    _require(isinstance(columns, list) and columns,
             "codeword file needs a nonempty 'columns' list")
    return tuple(tuple(_int_list(c, "column")) for c in columns)


def bundle_to_dict(bundle):
    return {
        "format": FORMAT,
        "perColumn": [list(c) for c in bundle.per_column],
        "downloaded": bundle.downloaded,
        "accessed": bundle.accessed,
    }


def bundle_from_dict(data):
    _check_format(data, "download file")
    per_column = data.get("perColumn", data.get("columns"))
    _require(isinstance(per_column, list) and per_column,
             "download file needs a nonempty 'perColumn' (or 'columns') list")
    columns = tuple(tuple(_int_list(c, "download column")) for c in per_column)
    total = sum(len(c) for c in columns)
    return DownloadBundle(
        per_column=columns,
        downloaded=data.get("downloaded", total),
        accessed=data.get("accessed", total),
    )


def message_to_dict(scheme, message):
    return {
        "format": FORMAT,
        "scheme": scheme,
        "message": list(message),
    }


def message_from_dict(data):
    _check_format(data, "message file")
    return tuple(_int_list(data.get("message"), "message"))


def load_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(path, data):
    write_text(path, json.dumps(data, indent=2, sort_keys=True) + "\n")


def write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
