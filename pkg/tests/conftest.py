from hypothesis import settings

settings.register_profile("srinv", deadline=None, max_examples=50)
settings.load_profile("srinv")
