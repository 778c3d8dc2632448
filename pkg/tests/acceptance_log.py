"""Per-criterion outcomes collected by the acceptance suite, printed at session end."""

RESULTS: dict[str, tuple[bool, str]] = {}


def record(criterion: str, passed: bool, detail: str = "") -> None:
    RESULTS[criterion] = (passed, detail)
    print(f"ACCEPTANCE {criterion}: {'PASS' if passed else 'FAIL'} {detail}")
