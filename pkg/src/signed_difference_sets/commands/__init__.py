"""Commands package initialization."""

# This file is intentionally left empty. Each command registers itself through its module's setup().
