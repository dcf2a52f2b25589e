from setuptools import setup, find_packages

setup(
    name="tree-graph-counterexample",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        "pydantic>=2.0.0",
        "networkx>=3.1",
        "numpy>=1.24.0",
    ],
    extras_require={
        "test": ["pytest>=7.0.0", "hypothesis>=6.70.0"],
    },
    entry_points={
        "console_scripts": [
            "arboreal=arboreal.cli:main",
        ],
    },
)
