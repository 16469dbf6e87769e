"""Graphs package"""
