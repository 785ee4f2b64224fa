"""Verification suite agents and the corpus they share"""
