"""Topology package"""
