from setuptools import setup, find_packages  # type: ignore

setup(
    name="flagdesigns",
    version="0.1.0",
    description="Mechanized classification of flag-transitive Steiner 4-designs",
    long_description=open("README.md", "r").read(),
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.12",
    ],
    keywords="steiner-system block-design permutation-group mathieu-group",
    packages=find_packages(".", include=["flagdesigns", "flagdesigns.*"]),
    package_data={"flagdesigns.data": ["*.txt", "*.json"]},
    install_requires=[
        "pydantic==2.7.3",
        "setuptools==70.0.0",
        "sympy==1.12.1",
        "galois==0.3.8",
        "numpy==1.26.4",
    ],
    extras_require={"test": ["pytest==8.2.2"]},
    entry_points={"console_scripts": ["flagdesigns = flagdesigns.cli:main"]},
)
