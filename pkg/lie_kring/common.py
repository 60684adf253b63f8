from typing import Optional

from pydantic import BaseModel, Field


class Verdict(BaseModel):
    """Outcome of checking one claim."""

    # claim id, e.g. "prop-4.2-i".
    claim: str
    # where the claim is stated, e.g. "Prop 4.2(i)".
    location: str
    passed: bool
    # short supporting evidence (always set on failure).
    witness: Optional[str] = None
    # qualification of a passing verdict.
    note: Optional[str] = None
    # full canonical text of the computed object, emitted by `--dump`.
    dump: Optional[str] = Field(default=None, exclude=True, repr=False)

    def model_post_init(self, __context) -> None:
        if not self.passed and self.witness is None:
            self.witness = self.dump or "(no witness)"


def compare(
    claim: str, location: str, computed, expected, note: Optional[str] = None
) -> Verdict:
    """Verdict for `computed == expected`. Characters are dumped in canonical text form."""
    passed = computed == expected
    dump = computed.to_text() if hasattr(computed, "to_text") else str(computed)
    if passed:
        return Verdict(claim=claim, location=location, passed=True, note=note, dump=dump)
    if hasattr(computed, "ambient_dim"):
        witness = "difference (computed - expected):\n" + (computed - expected).to_text()
    elif hasattr(computed, "to_text"):
        witness = f"computed:\n{computed.to_text()}\nexpected:\n{expected.to_text()}"
    else:
        witness = f"computed {computed!r}, expected {expected!r}"
    return Verdict(
        claim=claim, location=location, passed=False, witness=witness, dump=dump
    )
