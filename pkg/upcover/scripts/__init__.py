"""Upcover command line scripts."""
