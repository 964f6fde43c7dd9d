"""Shared utilities: error hierarchy, number theory and argparse helpers."""
