"""Configuration package"""
from .settings import Config
from .run_config import RunConfig

__all__ = ['Config', 'RunConfig']
