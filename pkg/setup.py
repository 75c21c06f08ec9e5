"""
    otocsim packaging.

"""
from setuptools import setup


try:
    import pypandoc
    long_description = pypandoc.convert_file('README.md', 'rst')
except(IOError, ImportError):
    long_description = open('README.md').read()

setup(
    name='otocsim',
    version='0.1.0',
    description='Statevector simulation of out-of-time-order correlators for random 2D brickwork circuits',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=['otocsim', 'otocsim.circuits', 'otocsim.montecarlo', 'otocsim.correlators', 'otocsim.harness'],
    install_requires=open('REQUIREMENTS.txt').read().split(),
    entry_points={'console_scripts': ['otocsim=otocsim.cli:main']},
    python_requires='>=3.8',
    license='MIT',
    classifiers=['Development Status :: 3 - Alpha',
                 'Programming Language :: Python :: 3.8',
                 'Programming Language :: Python :: 3.9',
                 'Programming Language :: Python :: 3.10',
                 'Programming Language :: Python :: 3.11']
    )
