"""Functions shared across the projects in this workspace.

Promote a function here once more than one project needs it, and add a
test for it under tests/.
"""


def dot_product(a, b):
    """Return the dot product of two equal-length sequences."""
    if len(a) != len(b):
        raise ValueError("sequences must have the same length")
    return sum(x * y for x, y in zip(a, b))
