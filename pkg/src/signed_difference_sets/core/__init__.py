"""Exact algebra behind the constructions: fields, groups, group rings and designs."""
