"""Shared pytest wiring.

The acceptance tests print one verdict line each; stdout capture would
normally hide those for passing tests, so they are replayed in a
dedicated terminal summary section.
"""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import acceptance_report

    if acceptance_report.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_report.LINES:
            terminalreporter.write_line(line)
