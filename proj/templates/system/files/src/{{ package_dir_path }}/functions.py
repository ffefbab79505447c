"""Functions exposed by {{ package_dir_name }}."""


def dot_product(a, b):
    """Return the dot product of two equal-length sequences."""
    if len(a) != len(b):
        raise ValueError("sequences must have the same length")
    return sum(x * y for x, y in zip(a, b))
