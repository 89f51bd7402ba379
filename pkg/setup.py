#!/usr/bin/env python3

"""
Setup script.
"""

from setuptools import setup

setup(setup_requires=["pbr"], pbr=True)
