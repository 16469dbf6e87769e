"""Command-line controls and report renderers"""
