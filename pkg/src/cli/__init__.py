"""Command-line interface for the matroid connectivity toolkit"""
