"""Posets package"""
