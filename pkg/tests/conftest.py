from hypothesis import HealthCheck, settings

# enumeration-backed properties can individually exceed the default deadline
settings.register_profile(
    "dcmkit",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dcmkit")
