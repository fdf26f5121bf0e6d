"""Pytest wiring: parse absl flags so absltest helpers work outside absltest.main()."""

from absl import flags


def pytest_configure(config) -> None:
    if not flags.FLAGS.is_parsed():
        flags.FLAGS.mark_as_parsed()
