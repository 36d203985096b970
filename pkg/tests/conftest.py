def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES, SUITE

    if LINES:
        terminalreporter.section(f"acceptance criteria ({SUITE} suite)")
        for line in LINES:
            terminalreporter.write_line(line)
