#!/usr/bin/env python

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

version = __import__('supra').__version__

requires = ['junit-xml>=1.8']

setup(
    name='supra',
    version=version,
    description='Deductive synthesizer of recursion-free programs from '
    'first-order specifications.',
    long_description='''
supra saturates the negated specification with a superposition calculus over
answer clauses. Uncomputable symbols may appear in the specification but never
in the synthesized program, which is built from computable symbols and
if-then-else. Programs can be checked on every finite interpretation up to a
given carrier size.
    ''',
    author='The supra contributors',
    license='BSD License',
    packages=['supra'],
    package_data={'supra': ['testfiles/*.spec']},
    scripts=['supra/bin/supra.py'],
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Code Generators',
        'Topic :: Utilities',
    ],
    install_requires=requires,
)
