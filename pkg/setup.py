from setuptools import setup, find_packages


setup(
    name='nonrainbow',
    version="0.1.0.dev0",
    description='Exact computation of non-rainbow colorings of surface triangulations',
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    install_requires=[
        'regex',
        'csvw>=1.5.6',
        'clldutils>=3.5,<4',
        'sympy>=1.12',
        'networkx>=2.6',
    ],
    extras_require={
        'dev': ['flake8', 'wheel', 'twine'],
        'test': [
            'pytest>=5',
            'pytest-mock',
            'pytest-cov',
            'hypothesis',
        ],
    },
    license='Apache 2.0',
    zip_safe=False,
    keywords='graph coloring triangulation homology',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    include_package_data=True,
    entry_points={
        'console_scripts': [
            "nonrainbow = nonrainbow.__main__:main",
        ]
    },
)
