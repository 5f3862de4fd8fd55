from setuptools import setup, find_packages

setup(
    name='otdrsense',
    version=open("version.txt").read(),
    packages=find_packages(),
    package_data={"otdrsense": ["configs/*.json"]},
    python_requires=">=3.8",
    license='Apache 2.0',
    install_requires=[req for req in open("requirements.txt").read().split("\n") if len(req) > 0],
    extras_require={"test": ["pytest>=6.0.0"]},
    entry_points={"console_scripts": ["otdrsense = otdrsense.cli.main:main"]},
    description='Detection-versus-communication tradeoffs for fiber tap sensing with coherent-state '
                'reflectometry, with spectral tools, Monte Carlo estimators and a reproducible CLI',
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: GPU",
        "Environment :: GPU :: NVIDIA CUDA",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        'Operating System :: POSIX',
        'Operating System :: Unix',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        "Topic :: Scientific/Engineering :: Physics",
        "Typing :: Typed"
    ]
)
