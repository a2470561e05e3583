from setuptools import setup, find_packages

setup(
    name="dotgraph",
    version="1.0.0",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        # Core Framework Dependencies
        "flask",
        "flask-cors",
        "waitress",

        # Computation
        "numpy",
        "networkx",

        # Utilities
        "python-dotenv",
    ],
    extras_require={
        "dev": [
            "pytest",
            "pytest-cov",
            "pytest-timeout",
            "hypothesis",
            "black",
            "flake8",
            "mypy",
        ],
    },
    entry_points={
        "console_scripts": [
            "dotgraph=dotgraph.run:main",
        ],
    },
    python_requires='>=3.8',
    description="Dot product graphs over finite product rings and verification of their decompositions",
)
