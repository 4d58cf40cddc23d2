import re

CRITERIA_TITLES = {
    1: "ex1 per-order detection table and POD row",
    2: "ex2 POD/PRD row and count-competition final states",
    3: "unsafe simultaneous removal pathology",
    4: "write-complexity bounds over the random corpus",
    5: "order-invariance and coverage safety over the random corpus",
    6: "reduced-sweep trend acceptance",
    7: "byte-identical CSV on rerun",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    outcomes: dict[int, str] = {}
    for status, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if getattr(rep, "when", "call") != "call" and status != "error":
                continue
            match = re.search(r"test_criterion_(\d+)", nodeid)
            if match:
                num = int(match.group(1))
                if outcomes.get(num) != "FAIL":
                    outcomes[num] = verdict
    if not outcomes:
        return
    writer = terminalreporter
    writer.section("acceptance criteria")
    for num in sorted(outcomes):
        title = CRITERIA_TITLES.get(num, "")
        writer.write_line(f"criterion {num}: {outcomes[num]}  ({title})")
