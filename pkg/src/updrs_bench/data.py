"""Loading and transforming the voice-telemonitoring dataset.

One CSV row is one voice recording session of one subject. The loader is
strict: schema and value domains are validated up front so that everything
downstream can assume clean, finite numbers.
"""

import csv
import math
from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path

import numpy as np

from .errors import (
    EmptyInput,
    EmptySubset,
    MissingFile,
    ParseError,
    RangeError,
    SchemaMismatch,
)

#: Expected CSV header, in canonical file order.
EXPECTED_COLUMNS = (
    "subject#", "age", "sex", "test_time", "motor_UPDRS", "total_UPDRS",
    "Jitter(%)", "Jitter(Abs)", "Jitter:RAP", "Jitter:PPQ5", "Jitter:DDP",
    "Shimmer", "Shimmer(dB)", "Shimmer:APQ3", "Shimmer:APQ5",
    "Shimmer:APQ11", "Shimmer:DDA", "NHR", "HNR", "RPDE", "DFA", "PPE",
)

#: The 18 model inputs, in the fixed column order used for every matrix.
FEATURE_COLUMNS = (
    "age", "sex",
    "Jitter(%)", "Jitter(Abs)", "Jitter:RAP", "Jitter:PPQ5", "Jitter:DDP",
    "Shimmer", "Shimmer(dB)", "Shimmer:APQ3", "Shimmer:APQ5",
    "Shimmer:APQ11", "Shimmer:DDA", "NHR", "HNR", "RPDE", "DFA", "PPE",
)

MOTOR_UPDRS_MIN = 0.0
MOTOR_UPDRS_MAX = 108.0

#: Absolute tolerance for treating a stored score as a whole number.
WHOLE_NUMBER_TOL = 1e-6

# Record attribute names, aligned with EXPECTED_COLUMNS.
_RECORD_FIELDS = (
    "subject_id", "age", "sex", "test_time", "motor_updrs", "total_updrs",
    "jitter_pct", "jitter_abs", "jitter_rap", "jitter_ppq5", "jitter_ddp",
    "shimmer", "shimmer_db", "shimmer_apq3", "shimmer_apq5",
    "shimmer_apq11", "shimmer_dda", "nhr", "hnr", "rpde", "dfa", "ppe",
)
_FEATURE_FIELDS = tuple(
    _RECORD_FIELDS[EXPECTED_COLUMNS.index(c)] for c in FEATURE_COLUMNS
)
_INTEGER_FIELDS = frozenset(("subject_id", "age", "sex"))


@dataclass(frozen=True)
class Record:
    """One voice-recording row."""

    subject_id: int
    age: int
    sex: int
    test_time: float
    motor_updrs: float
    total_updrs: float
    jitter_pct: float
    jitter_abs: float
    jitter_rap: float
    jitter_ppq5: float
    jitter_ddp: float
    shimmer: float
    shimmer_db: float
    shimmer_apq3: float
    shimmer_apq5: float
    shimmer_apq11: float
    shimmer_dda: float
    nhr: float
    hnr: float
    rpde: float
    dfa: float
    ppe: float


class SeverityClass(IntEnum):
    """Ordered symptom-severity bins."""

    MILD = 0
    MODERATE = 1
    SEVERE = 2

    def __str__(self):
        return self.name.capitalize()


@dataclass(frozen=True)
class TabularProblem:
    """Immutable feature matrix + target vector, the unit every learner consumes.

    ``row_keys`` keeps per-row provenance as (subject_id, test_time) pairs.
    """

    features: np.ndarray
    target: np.ndarray
    feature_names: tuple
    row_keys: tuple

    def __post_init__(self):
        feats = np.ascontiguousarray(self.features, dtype=np.float64)
        targ = np.ascontiguousarray(self.target, dtype=np.float64)
        if feats.ndim != 2 or feats.shape[0] == 0 or feats.shape[1] == 0:
            raise EmptyInput("feature matrix must be non-empty and 2-dimensional")
        if targ.shape != (feats.shape[0],):
            raise EmptyInput("target length must match the feature row count")
        if not np.isfinite(feats).all() or not np.isfinite(targ).all():
            raise RangeError("non-finite entry in features or target")
        names = tuple(self.feature_names)
        if len(names) != feats.shape[1]:
            raise SchemaMismatch("feature_names length must match column count")
        if len(set(names)) != len(names):
            raise SchemaMismatch("duplicate feature name")
        keys = tuple(self.row_keys)
        if len(keys) != feats.shape[0]:
            raise SchemaMismatch("row_keys length must match row count")
        feats.flags.writeable = False
        targ.flags.writeable = False
        object.__setattr__(self, "features", feats)
        object.__setattr__(self, "target", targ)
        object.__setattr__(self, "feature_names", names)
        object.__setattr__(self, "row_keys", keys)

    @property
    def n_rows(self):
        return self.features.shape[0]

    @property
    def n_features(self):
        return self.features.shape[1]

    def subset(self, indices):
        """New problem holding the given rows, in the given order."""
        idx = np.asarray(indices, dtype=np.intp)
        if idx.size == 0:
            raise EmptySubset("row selection is empty")
        return TabularProblem(
            features=self.features[idx],
            target=self.target[idx],
            feature_names=self.feature_names,
            row_keys=tuple(self.row_keys[i] for i in idx),
        )


@dataclass(frozen=True)
class Bag:
    """All recordings of one subject within one day, with one shared target."""

    subject_id: int
    time_step: int
    members: tuple = field(repr=False)
    bag_target: float = 0.0


def load_csv(path):
    """Parse and validate the telemonitoring CSV; returns rows in file order.

    Raises MissingFile, SchemaMismatch (offending column named), ParseError
    (first bad cell located by row and column) or RangeError.
    """
    path = Path(path)
    if not path.exists():
        raise MissingFile(f"no such file: {path}")

    with path.open(newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaMismatch("file is empty, expected a header line") from None
        header = [name.strip() for name in header]

        seen = set(header)
        for name in EXPECTED_COLUMNS:
            if name not in seen:
                raise SchemaMismatch(f"header is missing expected column '{name}'")
        for name in header:
            if name not in EXPECTED_COLUMNS:
                raise SchemaMismatch(f"header has unexpected column '{name}'")
        if len(header) != len(EXPECTED_COLUMNS):
            raise SchemaMismatch("header repeats a column name")
        positions = [header.index(name) for name in EXPECTED_COLUMNS]

        records = []
        for row_num, cells in enumerate(reader, start=1):
            if not cells:
                continue  # tolerate a trailing blank line
            if len(cells) != len(EXPECTED_COLUMNS):
                raise ParseError(
                    f"row {row_num}: expected {len(EXPECTED_COLUMNS)} cells, "
                    f"found {len(cells)}"
                )
            values = {}
            for field_name, col_name, pos in zip(
                _RECORD_FIELDS, EXPECTED_COLUMNS, positions
            ):
                cell = cells[pos].strip()
                try:
                    value = float(cell)
                except ValueError:
                    raise ParseError(
                        f"row {row_num}, column '{col_name}': "
                        f"non-numeric cell {cell!r}"
                    ) from None
                if not math.isfinite(value):
                    raise ParseError(
                        f"row {row_num}, column '{col_name}': non-finite cell"
                    )
                if field_name in _INTEGER_FIELDS:
                    if not value.is_integer():
                        raise ParseError(
                            f"row {row_num}, column '{col_name}': "
                            f"expected an integer, found {cell!r}"
                        )
                    value = int(value)
                values[field_name] = value

            if not MOTOR_UPDRS_MIN <= values["motor_updrs"] <= MOTOR_UPDRS_MAX:
                raise RangeError(
                    f"row {row_num}: motor UPDRS {values['motor_updrs']} outside "
                    f"[{MOTOR_UPDRS_MIN:g}, {MOTOR_UPDRS_MAX:g}]"
                )
            if values["sex"] not in (0, 1):
                raise RangeError(
                    f"row {row_num}: sex must be 0 or 1, found {values['sex']}"
                )
            records.append(Record(**values))

    return records


def select_features(records):
    """Build the canonical 18-feature problem targeting the motor score.

    Subject id, test time and the total score are provenance/auxiliary data
    and are excluded from the feature matrix.
    """
    if not records:
        raise EmptyInput("no records to select features from")
    n = len(records)
    features = np.empty((n, len(FEATURE_COLUMNS)), dtype=np.float64)
    target = np.empty(n, dtype=np.float64)
    row_keys = []
    for i, rec in enumerate(records):
        for j, field_name in enumerate(_FEATURE_FIELDS):
            features[i, j] = getattr(rec, field_name)
        target[i] = rec.motor_updrs
        row_keys.append((rec.subject_id, rec.test_time))
    return TabularProblem(
        features=features,
        target=target,
        feature_names=FEATURE_COLUMNS,
        row_keys=tuple(row_keys),
    )


def whole_updrs_subset(problem):
    """Rows whose target is a whole number, within WHOLE_NUMBER_TOL.

    Interpolated scores are generally fractional, so this keeps mostly the
    rows anchored at actual clinical examinations.
    """
    target = problem.target
    mask = np.abs(target - np.round(target)) <= WHOLE_NUMBER_TOL
    if not mask.any():
        raise EmptySubset("no row has a whole-number target")
    return problem.subset(np.flatnonzero(mask))


def discretize_severity(motor_updrs):
    """Map a motor score to its severity bin.

    Bins are half-open so fractional interpolated scores always land in
    exactly one class: [0, 33) mild, [33, 59) moderate, [59, 108] severe.
    """
    if not MOTOR_UPDRS_MIN <= motor_updrs <= MOTOR_UPDRS_MAX:
        raise RangeError(
            f"motor UPDRS {motor_updrs} outside "
            f"[{MOTOR_UPDRS_MIN:g}, {MOTOR_UPDRS_MAX:g}]"
        )
    if motor_updrs < 33.0:
        return SeverityClass.MILD
    if motor_updrs < 59.0:
        return SeverityClass.MODERATE
    return SeverityClass.SEVERE


def severity_counts(problem):
    """Class tally of the problem's targets; counts sum to the row count."""
    counts = {cls: 0 for cls in SeverityClass}
    for value in problem.target:
        counts[discretize_severity(float(value))] += 1
    return counts


def make_bags(records):
    """Group records into (subject, day) bags with the mean target.

    The session day is the integer part of ``test_time``; bags come back
    sorted by (subject_id, time_step).
    """
    if not records:
        raise EmptyInput("no records to bag")
    groups = {}
    for rec in records:
        key = (rec.subject_id, math.floor(rec.test_time))
        groups.setdefault(key, []).append(rec)
    bags = []
    for (subject_id, time_step) in sorted(groups):
        members = groups[(subject_id, time_step)]
        bag_target = float(np.mean([m.motor_updrs for m in members]))
        bags.append(
            Bag(
                subject_id=subject_id,
                time_step=time_step,
                members=tuple(members),
                bag_target=bag_target,
            )
        )
    return bags


def propositionalize(bags):
    """One row per bag: per-feature means of the members, target = bag target."""
    if not bags:
        raise EmptyInput("no bags to propositionalize")
    n = len(bags)
    features = np.empty((n, len(FEATURE_COLUMNS)), dtype=np.float64)
    target = np.empty(n, dtype=np.float64)
    row_keys = []
    for i, bag in enumerate(bags):
        for j, field_name in enumerate(_FEATURE_FIELDS):
            features[i, j] = np.mean([getattr(m, field_name) for m in bag.members])
        target[i] = bag.bag_target
        row_keys.append((bag.subject_id, float(bag.time_step)))
    return TabularProblem(
        features=features,
        target=target,
        feature_names=FEATURE_COLUMNS,
        row_keys=tuple(row_keys),
    )
