"""Polymorphism search package"""
