import os
from setuptools import setup, find_packages


setup(
    name="lincost",
    version=os.environ.get('VERSION'),
    author="The LinCost Authors",
    author_email="",
    description="LinCost infers cost-free resource types as linear maps over potential annotations.",
    long_description="""LinCost analyzes programs of a small strict functional language,
                        infers how each function reallocates potential from its argument
                        to its result, and compares the analysis with the iterative
                        annotated-type algorithm it replaces.""",
    url="https://github.com/lincost/lincost",
    classifiers=[
        'Programming Language :: Python :: 3',
        'Topic :: Software Development :: Compilers'
    ],
    install_requires=[
        "numpy",
        "pyyaml",
        "tqdm",
    ],
    extras_require={
        'dev': [
            'pytest',
            'pytest-cov',
            'pydocstyle',
            'prospector',
        ]
    },
    entry_points={
        'console_scripts': [
            'lincost=lincost.driver.cli:main',
        ],
    },
    package_data={
        'lincost.driver': ['corpus/*.lc'],
    },
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.8',
)
