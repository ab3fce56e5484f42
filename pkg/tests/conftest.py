import hypothesis

hypothesis.settings.register_profile("desk", max_examples=150, deadline=None)
hypothesis.settings.load_profile("desk")
