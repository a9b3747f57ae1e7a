"""Command-line surface: table rendering, the DL pairing, verification, caching.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 resource
limit.  All output is deterministic for a fixed (config, command): numbers are
rendered as decimal strings and mappings are emitted with sorted keys.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import dl as dlmod
from .chars import CharacterTable, ClassFunction, character_table
from .errors import GroupMismatch, InvalidType, NonFinite, NotVirtual, SizeLimit
from .grp import ConjugacyClasses, conjugacy_classes, parabolic
from .indres import frobenius_check, induce, induce_between, mackey_check
from .rootsys import (
    DEFAULT_MAX_ORDER,
    WeylGroup,
    build_cartan,
    build_root_system,
    enumerate_group,
    fundamental_degrees,
)
from math import prod

SCHEMA_VERSION = 1

ROSTER: tuple[tuple[str, int], ...] = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("D", 4),
    ("G", 2), ("F", 4),
)

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class Config:
    max_group_order: int = DEFAULT_MAX_ORDER
    rng_seed: int = 0
    cache_dir: Path = Path("~/.cache/weyl-dl")
    output_format: str = "text"

    def __post_init__(self) -> None:
        if self.max_group_order < 2:
            raise InvalidType(f"max_group_order must be >= 2, got {self.max_group_order}")
        if self.output_format not in FORMATS:
            raise InvalidType(f"output format must be one of {FORMATS}")


# ---------------------------------------------------------------------------
# character-table cache

@dataclass(frozen=True)
class TableCacheEntry:
    """Everything needed to rebuild a table without the eigenspace computation."""

    schema_version: int
    type_label: str
    rank: int
    central_rank: int
    class_words: tuple[str, ...]
    class_sizes: tuple[int, ...]
    degrees: tuple[int, ...]
    labels: tuple[tuple[int, ...], ...] | None
    values: tuple[tuple[int, ...], ...]


def cache_path(cfg: Config, type_label: str, rank: int, central_rank: int) -> Path:
    name = f"{type_label}{rank}z{central_rank}.v{SCHEMA_VERSION}.json"
    return cfg.cache_dir.expanduser() / name


def save_cache_entry(path: Path, entry: TableCacheEntry) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    payload = {
        "schema_version": str(entry.schema_version),
        "type_label": entry.type_label,
        "rank": str(entry.rank),
        "central_rank": str(entry.central_rank),
        "class_words": list(entry.class_words),
        "class_sizes": [str(s) for s in entry.class_sizes],
        "degrees": [str(d) for d in entry.degrees],
        "labels": None if entry.labels is None else [[str(p) for p in lam] for lam in entry.labels],
        "values": [[str(v) for v in row] for row in entry.values],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_cache_entry(
    path: Path, type_label: str, rank: int, central_rank: int
) -> TableCacheEntry | None:
    """Parse and fingerprint-check a cache file; any defect is a miss, never partial reuse."""
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            payload = json.load(fh)
        entry = TableCacheEntry(
            schema_version=int(payload["schema_version"]),
            type_label=payload["type_label"],
            rank=int(payload["rank"]),
            central_rank=int(payload["central_rank"]),
            class_words=tuple(payload["class_words"]),
            class_sizes=tuple(int(s) for s in payload["class_sizes"]),
            degrees=tuple(int(d) for d in payload["degrees"]),
            labels=None if payload["labels"] is None else tuple(
                tuple(int(p) for p in lam) for lam in payload["labels"]
            ),
            values=tuple(tuple(int(v) for v in row) for row in payload["values"]),
        )
    except (KeyError, TypeError, ValueError, json.JSONDecodeError):
        print(f"warning: ignoring corrupted cache file {path}", file=sys.stderr)
        return None
    if (entry.schema_version, entry.type_label, entry.rank, entry.central_rank) != (
        SCHEMA_VERSION, type_label, rank, central_rank,
    ):
        return None
    return entry


def _entry_matches_classes(entry: TableCacheEntry, W: WeylGroup, classes: ConjugacyClasses) -> bool:
    words = tuple(W.word_str(r) for r in classes.reps)
    return entry.class_words == words and entry.class_sizes == classes.sizes


def _table_from_entry(entry: TableCacheEntry, classes: ConjugacyClasses) -> CharacterTable:
    irreducibles = tuple(
        ClassFunction(classes.group_id, tuple(Fraction(v) for v in row))
        for row in entry.values
    )
    return CharacterTable(
        group_id=classes.group_id,
        classes=classes,
        irreducibles=irreducibles,
        degrees=entry.degrees,
        labels=entry.labels,
    )


def _rows_orthonormal(classes: ConjugacyClasses, values: tuple[tuple[int, ...], ...]) -> bool:
    k = classes.n_classes
    if len(values) != k or any(len(row) != k for row in values):
        return False
    inv = classes.inverse_class
    for i in range(k):
        for j in range(k):
            ip = sum(classes.sizes[c] * values[i][c] * values[j][inv[c]] for c in range(k))
            if ip != (classes.order if i == j else 0):
                return False
    return True


def load_or_compute_table(
    cfg: Config, W: WeylGroup, classes: ConjugacyClasses
) -> tuple[CharacterTable, bool]:
    """Cached table if it round-trips and verifies, else a fresh computation."""
    cartan = W.cartan
    path = cache_path(cfg, cartan.type_label, cartan.rank, cartan.central_rank)
    entry = load_cache_entry(path, cartan.type_label, cartan.rank, cartan.central_rank)
    if entry is not None:
        if _entry_matches_classes(entry, W, classes) and _rows_orthonormal(classes, entry.values):
            return _table_from_entry(entry, classes), True
        print(f"warning: cache file {path} is inconsistent; recomputing", file=sys.stderr)
    table = character_table(W, seed=cfg.rng_seed)
    save_cache_entry(path, TableCacheEntry(
        schema_version=SCHEMA_VERSION,
        type_label=cartan.type_label,
        rank=cartan.rank,
        central_rank=cartan.central_rank,
        class_words=tuple(W.word_str(r) for r in classes.reps),
        class_sizes=classes.sizes,
        degrees=table.degrees,
        labels=table.labels,
        values=tuple(table.values_row(i) for i in range(table.n_irreducibles)),
    ))
    return table, False


def build_group(cfg: Config, type_label: str, rank: int) -> tuple[WeylGroup, ConjugacyClasses]:
    cartan = build_cartan(type_label, rank)
    W = enumerate_group(build_root_system(cartan), max_order=cfg.max_group_order)
    return W, conjugacy_classes(W)


# ---------------------------------------------------------------------------
# verification suite

@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


def _subsets(rank: int) -> list[tuple[int, ...]]:
    return list(itertools.chain.from_iterable(
        itertools.combinations(range(rank), k) for k in range(rank + 1)
    ))


def run_type_checks(
    cfg: Config, W: WeylGroup, classes: ConjugacyClasses, table: CharacterTable
) -> list[CheckItem]:
    """The full invariant suite for one type; the heavier identities are rank-gated."""
    checks: list[CheckItem] = []
    add = checks.append
    cartan = W.cartan

    expected = prod(fundamental_degrees(cartan.type_label, cartan.rank))
    add(CheckItem("group-order-degrees", W.order == expected, f"order={W.order}"))

    agree = all(W.lengths[e] == W.inversions(e) for e in range(W.order))
    add(CheckItem("length-inversions", agree))

    npos = W.rootsystem.n_positive
    w0 = W.longest_element
    add(CheckItem("longest-element", W.lengths[w0] == npos and W.mul(w0, w0) == 0))

    add(CheckItem("faithful-action", len(set(W.elements)) == W.order))

    reflections = set()
    for g in W.generator_indices:
        reflections.update(int(x) for x in W.conjugate_sweep(g))
    add(CheckItem("reflection-count", len(reflections) == npos, f"count={len(reflections)}"))

    add(CheckItem("class-sizes-sum", sum(classes.sizes) == W.order,
                  f"classes={classes.n_classes}"))

    k = classes.n_classes
    rows = [table.values_row(i) for i in range(k)]
    add(CheckItem("table-integer-values",
                  all(v.denominator == 1 for chi in table.irreducibles for v in chi.values)))
    add(CheckItem("row-orthonormality", _rows_orthonormal(classes, tuple(rows))))

    cols_ok = True
    inv = classes.inverse_class
    for c in range(k):
        for d in range(k):
            ip = sum(rows[i][c] * rows[i][inv[d]] for i in range(k))
            if ip != (W.order // classes.sizes[c] if c == d else 0):
                cols_ok = False
    add(CheckItem("column-orthogonality", cols_ok))

    add(CheckItem("degree-squares", sum(d * d for d in table.degrees) == W.order))
    add(CheckItem("degree-divides-order", all(W.order % d == 0 for d in table.degrees)))

    if cartan.type_label == "A":
        labels_ok = table.labels is not None and len(set(table.labels)) == k
        add(CheckItem("type-a-partition-labels", bool(labels_ok)))

    if W.rank <= 4:
        bad = 0
        first = ""
        for I in _subsets(W.rank):
            P = parabolic(W, I)
            sub_table = character_table(W, P.classes, seed=cfg.rng_seed)
            report = frobenius_check(W, P, table, sub_table)
            if not report.ok:
                bad += len(report.violations)
                first = first or report.violations[0]
        add(CheckItem("frobenius-reciprocity", bad == 0, first or f"subsets={2 ** W.rank}"))

    if W.rank <= 3:
        bad = 0
        first = ""
        for I in _subsets(W.rank):
            P = parabolic(W, I)
            sub_table = character_table(W, P.classes, seed=cfg.rng_seed)
            for J in _subsets(W.rank):
                for chi in sub_table.irreducibles:
                    report = mackey_check(W, I, J, chi)
                    if not report.ok:
                        bad += 1
                        first = first or report.violations[0]
        add(CheckItem("mackey-decomposition", bad == 0, first))

        bad = 0
        for J in _subsets(W.rank):
            PJ = parabolic(W, J)
            tj = character_table(W, PJ.classes, seed=cfg.rng_seed)
            for I in _subsets(W.rank):
                if not set(J) <= set(I):
                    continue
                PI = parabolic(W, I)
                for chi in tj.irreducibles:
                    step = induce_between(W, PJ.classes, PI.classes, chi)
                    via = induce(step, PI, W)
                    direct = induce(chi, PJ, W)
                    if via.values != direct.values:
                        bad += 1
        add(CheckItem("induction-transitivity", bad == 0))

    twist = dlmod.verify_sign_twist(W, table)
    add(CheckItem("sign-twist", twist.ok, twist.violations[0] if twist.violations else ""))

    invrep = dlmod.verify_involution(W, table)
    add(CheckItem("involution", invrep.ok, invrep.violations[0] if invrep.violations else ""))

    matrix = dlmod.dl_matrix(W, table)
    add(CheckItem("dl-unit-images", all(
        sorted(col) == [0] * (k - 1) + [1] for col in matrix
    )))

    inverse_same = matrix == dlmod.dl_inverse_matrix(W, table)
    add(CheckItem("dl-inverse-agreement", inverse_same))

    if cartan.type_label == "A":
        pairs = dlmod.springer_table(W, table)
        assert table.labels is not None
        perm = dlmod.sign_tensor_permutation(W, table)
        from .symchars import transpose

        transposed = all(
            table.labels[perm[i]] == transpose(table.labels[i]) for i in range(k)
        )
        add(CheckItem("springer-transpose", transposed,
                      "; ".join(f"{a.display}->{b.display}" for a, b in pairs[:3])))

    parity = all(
        dlmod.ShiftLedger(central, W.rank).parity_identity_holds(size)
        for central in range(4)
        for size in range(W.rank + 1)
    )
    add(CheckItem("shift-parity-ledger", parity))

    return checks


def global_parity_checks() -> list[CheckItem]:
    ok = all(
        dlmod.ShiftLedger(central, sigma).parity_identity_holds(size)
        for central in range(4)
        for sigma in range(7)
        for size in range(sigma + 1)
    )
    return [CheckItem("shift-parity-ledger-sweep", ok, "central<=3, sigma<=6")]


# ---------------------------------------------------------------------------
# rendering

def _ds(x) -> str:
    return str(int(x))


def _cartan_payload(W: WeylGroup) -> list[list[str]]:
    return [[_ds(v) for v in row] for row in W.cartan.cartan_matrix]


def _classes_payload(W: WeylGroup, classes: ConjugacyClasses) -> list[dict]:
    return [
        {"word": W.word_str(rep), "size": _ds(size)}
        for rep, size in zip(classes.reps, classes.sizes)
    ]


def _irreducibles_payload(table: CharacterTable, extra=None) -> list[dict]:
    out = []
    names = [lab.display for lab in dlmod.irreducible_labels(table)]
    for i in range(table.n_irreducibles):
        item = {
            "label": names[i],
            "degree": _ds(table.degrees[i]),
            "values": [_ds(v) for v in table.values_row(i)],
        }
        if extra:
            item.update(extra[i])
        out.append(item)
    return out


def _checks_payload(checks: list[CheckItem], target: str | None = None) -> list[dict]:
    out = []
    for c in checks:
        item = {"name": c.name, "passed": c.passed}
        if c.detail:
            item["detail"] = c.detail
        if target is not None:
            item["target"] = target
        out.append(item)
    return out


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _csv_row(fields: list[str]) -> str:
    quoted = []
    for f in fields:
        if any(ch in f for ch in ",\"\n"):
            f = '"' + f.replace('"', '""') + '"'
        quoted.append(f)
    return ",".join(quoted)


def render_table(cfg: Config, W: WeylGroup, classes: ConjugacyClasses, table: CharacterTable) -> str:
    words = [W.word_str(r) for r in classes.reps]
    names = [lab.display for lab in dlmod.irreducible_labels(table)]
    if cfg.output_format == "json":
        return _emit_json({
            "label": W.cartan.label,
            "order": _ds(W.order),
            "cartan": _cartan_payload(W),
            "classes": _classes_payload(W, classes),
            "irreducibles": _irreducibles_payload(table),
            "checks": [],
        })
    if cfg.output_format == "csv":
        lines = [_csv_row(["label", "degree"] + words)]
        for i in range(table.n_irreducibles):
            lines.append(_csv_row(
                [names[i], _ds(table.degrees[i])] + [_ds(v) for v in table.values_row(i)]
            ))
        return "\n".join(lines)
    header = [f"# {W.cartan.label}: |W| = {W.order}, {classes.n_classes} classes"]
    header.append("# classes: " + ", ".join(
        f"{w} (size {s})" for w, s in zip(words, classes.sizes)
    ))
    cols = ["label", "degree"] + words
    rows = [[names[i], _ds(table.degrees[i])] + [_ds(v) for v in table.values_row(i)]
            for i in range(table.n_irreducibles)]
    widths = [max(len(col), *(len(r[j]) for r in rows)) for j, col in enumerate(cols)]
    lines = header
    lines.append("  ".join(col.ljust(widths[j]) for j, col in enumerate(cols)).rstrip())
    for r in rows:
        lines.append("  ".join(r[j].rjust(widths[j]) if j else r[j].ljust(widths[j])
                               for j in range(len(cols))).rstrip())
    return "\n".join(lines)


SPRINGER_CONVENTION = "trivial character <-> single-row partition in type A"


def render_dl(
    cfg: Config, W: WeylGroup, classes: ConjugacyClasses, table: CharacterTable,
    checks: list[CheckItem],
) -> str:
    perm = dlmod.sign_tensor_permutation(W, table)
    names = [lab.display for lab in dlmod.irreducible_labels(table)]
    if cfg.output_format == "json":
        extra = [
            {"dl_image": names[perm[i]], "dl_image_index": _ds(perm[i])}
            for i in range(table.n_irreducibles)
        ]
        return _emit_json({
            "label": W.cartan.label,
            "springer_convention": SPRINGER_CONVENTION,
            "cartan": _cartan_payload(W),
            "classes": _classes_payload(W, classes),
            "irreducibles": _irreducibles_payload(table, extra=extra),
            "checks": _checks_payload(checks),
        })
    pair_lines = []
    for i in range(table.n_irreducibles):
        if perm[i] == i:
            pair_lines.append((names[i], "fixed", ""))
        elif perm[i] > i:
            pair_lines.append((names[i], "<->", names[perm[i]]))
    if cfg.output_format == "csv":
        lines = [f"# springer convention: {SPRINGER_CONVENTION}",
                 _csv_row(["source", "relation", "image"])]
        lines += [_csv_row(list(p)) for p in pair_lines]
        lines += [_csv_row([c.name, "passed" if c.passed else "FAILED", c.detail])
                  for c in checks]
        return "\n".join(lines)
    lines = [f"# {W.cartan.label}: DL pairing on {table.n_irreducibles} irreducibles",
             f"# springer convention: {SPRINGER_CONVENTION}"]
    for a, rel, b in pair_lines:
        lines.append(f"{a} {rel} {b}".rstrip())
    for c in checks:
        lines.append(f"{'ok' if c.passed else 'FAIL'} {c.name}")
    return "\n".join(lines)


def render_verify_single(
    cfg: Config, W: WeylGroup, classes: ConjugacyClasses, table: CharacterTable,
    checks: list[CheckItem],
) -> str:
    if cfg.output_format == "json":
        return _emit_json({
            "label": W.cartan.label,
            "cartan": _cartan_payload(W),
            "classes": _classes_payload(W, classes),
            "irreducibles": _irreducibles_payload(table),
            "checks": _checks_payload(checks),
        })
    if cfg.output_format == "csv":
        lines = [_csv_row(["name", "passed", "detail"])]
        lines += [_csv_row([c.name, "true" if c.passed else "false", c.detail]) for c in checks]
        return "\n".join(lines)
    passed = sum(1 for c in checks if c.passed)
    lines = [f"# verify {W.cartan.label}"]
    for c in checks:
        suffix = f"  [{c.detail}]" if c.detail else ""
        lines.append(f"{'ok' if c.passed else 'FAIL'} {c.name}{suffix}")
    lines.append(f"# {passed}/{len(checks)} checks passed")
    return "\n".join(lines)


def render_verify_all(cfg: Config, results: list[tuple[str, list[CheckItem]]]) -> str:
    if cfg.output_format == "json":
        all_checks = []
        for label, checks in results:
            all_checks += _checks_payload(checks, target=label)
        return _emit_json({
            "cartan": [],
            "classes": [],
            "irreducibles": [],
            "checks": all_checks,
        })
    if cfg.output_format == "csv":
        lines = [_csv_row(["target", "name", "passed", "detail"])]
        for label, checks in results:
            lines += [_csv_row([label, c.name, "true" if c.passed else "false", c.detail])
                      for c in checks]
        return "\n".join(lines)
    lines = []
    total = passed = 0
    for label, checks in results:
        lines.append(f"# verify {label}")
        for c in checks:
            suffix = f"  [{c.detail}]" if c.detail else ""
            lines.append(f"{'ok' if c.passed else 'FAIL'} {c.name}{suffix}")
            total += 1
            passed += c.passed
    lines.append(f"# {passed}/{total} checks passed")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands

def cmd_table(cfg: Config, type_label: str, rank: int) -> int:
    W, classes = build_group(cfg, type_label, rank)
    table, _ = load_or_compute_table(cfg, W, classes)
    print(render_table(cfg, W, classes, table))
    return 0


def _dl_checks(cfg: Config, W: WeylGroup, table: CharacterTable) -> list[CheckItem]:
    twist = dlmod.verify_sign_twist(W, table)
    invrep = dlmod.verify_involution(W, table)
    agree = dlmod.dl_matrix(W, table) == dlmod.dl_inverse_matrix(W, table)
    return [
        CheckItem("sign-twist", twist.ok, twist.violations[0] if twist.violations else ""),
        CheckItem("involution", invrep.ok, invrep.violations[0] if invrep.violations else ""),
        CheckItem("dl-inverse-agreement", agree),
    ]


def cmd_dl(cfg: Config, type_label: str, rank: int) -> int:
    W, classes = build_group(cfg, type_label, rank)
    table, _ = load_or_compute_table(cfg, W, classes)
    checks = _dl_checks(cfg, W, table)
    print(render_dl(cfg, W, classes, table, checks))
    return 0 if all(c.passed for c in checks) else 1


def cmd_verify(cfg: Config, targets: list[str]) -> int:
    if len(targets) == 1 and targets[0] == "all":
        results = []
        for type_label, rank in ROSTER:
            W, classes = build_group(cfg, type_label, rank)
            table, _ = load_or_compute_table(cfg, W, classes)
            results.append((W.cartan.label, run_type_checks(cfg, W, classes, table)))
        results.append(("ledger", global_parity_checks()))
        print(render_verify_all(cfg, results))
        ok = all(c.passed for _, checks in results for c in checks)
        return 0 if ok else 1
    if len(targets) == 2:
        type_label, rank_str = targets
        try:
            rank = int(rank_str)
        except ValueError:
            raise InvalidType(f"rank must be an integer, got {rank_str!r}")
        W, classes = build_group(cfg, type_label, rank)
        table, _ = load_or_compute_table(cfg, W, classes)
        checks = run_type_checks(cfg, W, classes, table)
        print(render_verify_single(cfg, W, classes, table, checks))
        return 0 if all(c.passed for c in checks) else 1
    raise InvalidType("verify expects 'TYPE RANK' or 'all'")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cache-dir", type=Path, default=Path("~/.cache/weyl-dl"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)

    parser = argparse.ArgumentParser(
        prog="weyl-dl",
        description="Exact Weyl-group character tables and the Deligne-Lusztig involution",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", parents=[common], help="print a character table")
    p_table.add_argument("type_label", metavar="TYPE")
    p_table.add_argument("rank", metavar="RANK", type=int)

    p_dl = sub.add_parser("dl", parents=[common], help="print the DL pairing of irreducibles")
    p_dl.add_argument("type_label", metavar="TYPE")
    p_dl.add_argument("rank", metavar="RANK", type=int)

    p_verify = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p_verify.add_argument("targets", metavar="TYPE RANK | all", nargs="+")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(
            max_group_order=args.max_order,
            rng_seed=args.seed,
            cache_dir=args.cache_dir,
            output_format=args.format,
        )
        if args.command == "table":
            return cmd_table(cfg, args.type_label.upper(), args.rank)
        if args.command == "dl":
            return cmd_dl(cfg, args.type_label.upper(), args.rank)
        if args.command == "verify":
            targets = args.targets
            if len(targets) == 2:
                targets = [targets[0].upper(), targets[1]]
            return cmd_verify(cfg, targets)
        raise InvalidType(f"unknown command {args.command}")
    except (InvalidType, NonFinite, GroupMismatch, NotVirtual) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
