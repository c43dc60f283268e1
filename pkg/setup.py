from setuptools import setup, find_packages
import pseudolines

setup(
    name='pseudoline-arrangements',
    version=pseudolines.__version__,
    description='Degree sequences, constructions and distance structure of simple (pseudo)line arrangement graphs.',
    license='BSD',
    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    python_requires='>=3.9',
    install_requires=[
        'Django>=3.2',
        'networkx>=2.6',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
        'docs': ['sphinx'],
    },
    entry_points={
        'console_scripts': [
            'pseudolines = pseudolines.cli:main',
        ],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Framework :: Django',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ]
)
