"""Setup script for yamabe-lab package."""

from setuptools import setup, find_packages

setup(
    name="yamabe-lab",
    version="0.1.0",
    packages=find_packages(include=["src", "src.*"]),
    entry_points={
        "console_scripts": [
            "yamabe-lab=src.cli.main:main",
        ],
    },
)
