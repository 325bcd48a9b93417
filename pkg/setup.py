from setuptools import setup, find_packages
import os

# Read the contents of README.md
with open("README.md", encoding="utf-8") as f:
    long_description = f.read()

# Get version from environment variable for CI/CD or use default
version = os.environ.get("RELEASE_VERSION", "0.1.0")

setup(
    name="levelgame-cmd",
    version=version,
    packages=find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
    package_data={
        "levelgame_cli": ["data/*.game"],
    },
    install_requires=[
        "numpy>=1.22",
    ],
    extras_require={
        "gui": [
            "rich",
        ],
        "full": [
            "rich",
        ],
    },
    entry_points={
        "console_scripts": [
            "levelgame=levelgame_cli.cli:main",
        ],
    },
    description="Egalitarian allocation values and axiom checks for cooperative games with level structures",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
)
