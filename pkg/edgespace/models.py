# edgespace/models.py

import json

from .edgeset import EdgeSet

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"
STATUSES = (HOLDS, FAILS, INCONCLUSIVE)


def to_jsonable(value):
    """Convert edge sets, sets and tuples into sorted JSON-ready values"""
    if isinstance(value, EdgeSet):
        return list(value.sorted())
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if hasattr(value, "item"):
        return value.item()
    return value


class BaseRecord:
    """Base class for report records"""

    def __repr__(self):
        """String representation of the record"""
        class_name = self.__class__.__name__
        attributes = ', '.join(f"{k}={v}" for k, v in self.__dict__.items()
                               if not k.startswith('_'))
        return f"{class_name}({attributes})"


class Verdict(BaseRecord):
    """Outcome of one named check"""

    def __init__(self, name, status, witness=None, reason=None):
        """
        Initialize a verdict

        Args:
            name (str): Check name
            status (str): One of holds, fails, inconclusive
            witness (any, optional): Concrete witness; required when the check fails
            reason (str, optional): Why the check could not decide

        Raises:
            ValueError: On an unknown status or a failure without witness
        """
        if status not in STATUSES:
            raise ValueError(f"unknown verdict status '{status}'")
        if status == FAILS and witness is None:
            raise ValueError(f"failing check '{name}' needs a witness")
        self.name = name
        self.status = status
        self.witness = witness
        self.reason = reason

    @classmethod
    def holds(cls, name):
        return cls(name, HOLDS)

    @classmethod
    def fails(cls, name, witness):
        return cls(name, FAILS, witness=witness)

    @classmethod
    def inconclusive(cls, name, reason):
        return cls(name, INCONCLUSIVE, reason=reason)

    @classmethod
    def check(cls, name, ok, witness):
        """holds when ok, otherwise fails with the given witness"""
        return cls.holds(name) if ok else cls.fails(name, witness)

    def to_dict(self):
        data = {"name": self.name, "status": self.status}
        if self.witness is not None:
            data["witness"] = to_jsonable(self.witness)
        if self.reason is not None:
            data["reason"] = self.reason
        return data

    def summary(self):
        line = f"{self.status:<12} {self.name}"
        if self.status == FAILS:
            line += f"  witness={json.dumps(to_jsonable(self.witness), sort_keys=True)}"
        elif self.status == INCONCLUSIVE:
            line += f"  ({self.reason})"
        return line


class Report(BaseRecord):
    """Result of one experiment: verdicts, numeric series and observations"""

    def __init__(self, experiment, parameters=None):
        """
        Initialize an empty report

        Args:
            experiment (str): Experiment name
            parameters (dict, optional): Generator, radii, bounds and the like
        """
        self.experiment = experiment
        self.parameters = dict(parameters or {})
        self.checks = []
        self.series = {}
        self.observations = {}

    def add(self, verdict):
        self.checks.append(verdict)
        return verdict

    def add_series(self, name, values):
        """
        Attach a numeric series

        Raises:
            ValueError: If the report has radii and the lengths differ
        """
        values = [to_jsonable(v) for v in values]
        radii = self.parameters.get("radii")
        if radii is not None and len(values) != len(radii):
            raise ValueError(f"series '{name}' has {len(values)} values for {len(radii)} radii")
        self.series[name] = values

    def observe(self, key, value):
        self.observations[key] = value

    @property
    def failures(self):
        return [v for v in self.checks if v.status == FAILS]

    @property
    def failed(self):
        return bool(self.failures)

    @property
    def status(self):
        statuses = {v.status for v in self.checks}
        if FAILS in statuses:
            return FAILS
        if INCONCLUSIVE in statuses or not statuses:
            return INCONCLUSIVE
        return HOLDS

    def verdict(self, name):
        for v in self.checks:
            if v.name == name:
                return v
        raise KeyError(name)

    def to_dict(self):
        return {
            "experiment": self.experiment,
            "parameters": to_jsonable(self.parameters),
            "checks": [v.to_dict() for v in self.checks],
            "series": to_jsonable(self.series),
            "observations": to_jsonable(self.observations),
            "status": self.status,
        }

    def to_json(self):
        """Deterministic JSON text: sorted keys, series in radius order"""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def summary_lines(self):
        lines = [f"{self.experiment}: {self.status}"]
        lines.extend(f"  {v.summary()}" for v in self.checks)
        return lines
