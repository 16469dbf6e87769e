"""Multihomomorphism posets package"""
