"""Graph, poset and identity file formats and corpus providers"""
