import sys
import setuptools

long_description = '''
Ordering-based local search for Bayesian network structure learning with
weighted parent scores: exact ordering DP, parameterized neighborhoods and
r-optimal hill climbing.
'''

if sys.version_info < (3, 8):
    sys.exit('Python>=3.8 is required by ordsearch.')

setuptools.setup(
    name="ordsearch",
    version="0.1.0",

    description="Ordering-based local search for weighted BN structure "
                "learning",
    long_description=long_description,
    license='Apache License Version 2.0',
    packages=setuptools.find_packages(exclude=["examples", "docs"]),
    package_data={'ordsearch.data': ['result_schema.json']},
    include_package_data=True,
    platforms='any',
    python_requires='>=3.8',

    install_requires=[
        'sortedcontainers',
        'numpy<2',
        'networkx',
        'jsonpickle',
        'pyyaml',
        'jsonschema',
        'texar-pytorch',
    ],
    extras_require={
        'test': ['ddt', 'jsonschema'],
    },
    entry_points={
          'console_scripts': [
              'ordsearch = scripts.local_search.__main__:main'
          ]
      },
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
    ]
)
