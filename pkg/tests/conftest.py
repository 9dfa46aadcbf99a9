"""Shared strategies and the acceptance summary hook."""

from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spanfactor.graph import from_edge_mask

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False):
    """Labeled graphs as random edge masks; ``connected`` adds a random spanning path."""
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    g = from_edge_mask(n, mask)
    if connected and n > 1:
        order = draw(st.permutations(range(n)))
        for a, b in zip(order, order[1:]):
            g = g.add_edge(a, b) if not g.has_edge(a, b) else g
    return g


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria run at full scale")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            for name, value in getattr(rep, "user_properties", []):
                if name == "acceptance" and rep.when == "call":
                    lines.append(value)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
