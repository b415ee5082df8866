from setuptools import find_packages, setup

# Read README.md content
try:
    with open("README.md", "r", encoding="utf-8") as fh:
        long_description = fh.read()
except FileNotFoundError:
    long_description = "Positive-definiteness of geodesic exponential kernels"
    print("Warning: README.md not found, using default description")

setup(
    name="GeoKernelLab",
    version="0.1.0",
    description="Positive-definiteness of geodesic exponential kernels on curved spaces",
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.22.0",
        "scipy>=1.8.0",
        "networkx>=2.8",
        "python-dotenv>=0.17.0",
        "colorlog>=6.8.0",  # colored console logging
    ],
    extras_require={
        "dev": [
            "pytest>=6.2.0",
            "pytest-cov>=2.12.0",
            "pytest-mock>=3.6.0",
            "hypothesis>=6.0.0",  # fuzzed metric and kernel invariants
            "flake8>=3.9.0",
        ],
    },
    entry_points={
        'console_scripts': [
            'geo-kernel-lab=geo_kernel_lab.main:main',
        ],
    },
)
