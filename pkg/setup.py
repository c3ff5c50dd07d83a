import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="gaussrdp",
    version="0.0.1",
    description="Bounds, transportation-inequality checks and scalar quantizer designs for the Gaussian "
                "distortion-rate-perception function with limited common randomness.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['examples', 'examples.*']),
    scripts=[
        'query-bound.py',
        'sweep-curves.py',
        'verify-suite.py',
    ],
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.6',
        'termcolor==1.1.0',
    ],
)
