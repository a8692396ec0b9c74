from hypothesis import settings

# No wall-clock deadline anywhere: exact big-int arithmetic has occasional
# slow examples and flaky deadline failures help nobody.
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")
