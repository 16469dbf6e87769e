"""Run configuration shared by the CLI and the corpus runner"""
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Any, Dict, Mapping, Optional, Tuple

from .settings import Config


@dataclass(frozen=True)
class RunConfig:
    """Budgets, identity selection, seed and output mode for one run"""

    inputs: Tuple[str, ...] = ()
    format: str = Config.GRAPH_CONFIG["default_format"]
    max_elements: int = Config.MHOM_CONFIG["max_elements"]
    max_faces: int = Config.TOPOLOGY_CONFIG["max_faces"]
    max_hom_dim: int = Config.TOPOLOGY_CONFIG["max_hom_dim"]
    max_core_vertices: int = Config.GRAPH_CONFIG["max_core_vertices"]
    budget_ms: int = Config.SEARCH_CONFIG["budget_ms"]
    max_nodes: int = Config.SEARCH_CONFIG["max_nodes"]
    max_classes: int = Config.SEARCH_CONFIG["max_classes"]
    samples: int = Config.MHOM_CONFIG["samples"]
    identity: str = Config.SEARCH_CONFIG["default_identity"]
    idempotent: bool = Config.SEARCH_CONFIG["idempotent"]
    seed: int = Config.RUN_CONFIG["seed"]
    jobs: int = Config.RUN_CONFIG["jobs"]
    json: bool = False
    extra: Tuple[Tuple[str, Any], ...] = field(default=(), compare=False)

    _POSITIVE = (
        "max_elements", "max_faces", "max_core_vertices", "budget_ms",
        "max_nodes", "max_classes", "samples", "jobs",
    )

    def __post_init__(self):
        for name in self._POSITIVE:
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.max_hom_dim < 0:
            raise ValueError(f"max_hom_dim must be non-negative, got {self.max_hom_dim}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.format not in Config.GRAPH_CONFIG["formats"]:
            raise ValueError(f"unknown format {self.format!r}")

    @classmethod
    def build(cls, overrides: Optional[Mapping[str, Any]] = None,
              environ: Optional[Mapping[str, str]] = None) -> "RunConfig":
        """Defaults, then HOMTOP_* environment, then explicit overrides"""
        values: Dict[str, Any] = Config.env_overrides(environ)
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise ValueError(f"unknown config keys: {unknown}")
        return cls(**values)

    def with_overrides(self, **changes: Any) -> "RunConfig":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["inputs"] = list(self.inputs)
        data.pop("extra")
        data.update(dict(self.extra))
        return data
