from hypothesis import settings

# deterministic property-test runs; every checked property is a theorem, so
# repeatability matters more than fresh randomness per run
settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")
