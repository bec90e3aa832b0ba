"""
Shared pytest setup.

Keeps the repository root importable and registers Hypothesis profiles;
select one with HYPOTHESIS_PROFILE=ci.
"""
import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None)
settings.register_profile("ci", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
