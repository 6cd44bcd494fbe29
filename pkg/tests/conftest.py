import hypothesis

hypothesis.settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    max_examples=100,
)
hypothesis.settings.load_profile("ci")
