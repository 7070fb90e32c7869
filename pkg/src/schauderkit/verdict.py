from __future__ import annotations

from dataclasses import dataclass, field

# payload key carried by each verdict tag
_PAYLOAD_KEY = {
    "converges": "certificate",
    "precompact": "certificate",
    "diverges": "witness",
    "not_precompact": "witness",
    "inconclusive": "reason",
}


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure with its finite, re-checkable evidence.

    ``tag`` is one of converges / diverges / precompact / not_precompact /
    inconclusive.  Certificates and witnesses are plain JSON-ready dicts.
    """

    tag: str
    payload: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in _PAYLOAD_KEY:
            raise ValueError(f"unknown verdict tag {self.tag!r}")

    @property
    def is_positive(self) -> bool:
        return self.tag in ("converges", "precompact")

    @property
    def is_negative(self) -> bool:
        return self.tag in ("diverges", "not_precompact")

    @property
    def certificate(self) -> dict | None:
        return self.payload if self.is_positive else None

    @property
    def witness(self) -> dict | None:
        return self.payload if self.is_negative else None

    def to_dict(self) -> dict:
        return {"verdict": self.tag, _PAYLOAD_KEY[self.tag]: self.payload}

    @classmethod
    def from_dict(cls, d: dict) -> Verdict:
        tag = d["verdict"]
        return cls(tag, d[_PAYLOAD_KEY[tag]])
