from setuptools import setup, find_packages
import topochains

with open('README.rst', 'r', encoding='utf-8') as readme_file:
    readme = readme_file.read()
with open('HISTORY.rst', 'r', encoding='utf-8') as history_file:
    history = history_file.read()

setup(
    name='topochains',
    version = topochains.__version__,
    description = 'Exact chain-level invariants of finite simplicial sets',
    long_description = readme + '\n\n' + history,
    author = topochains.__author__,
    zip_safe=False,
    license=topochains.__license__,
    keywords='algebraic topology, simplicial sets, cobar construction, homology, local coefficients, todd-coxeter',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    install_requires=['sympy'],
    tests_require=['pytest', 'hypothesis'],
    entry_points={
        'console_scripts': ['topochains=topochains.cli:main']
    },
    test_suite="tests",
    packages=find_packages(exclude=('tests',))
    )
