from setuptools import setup

with open("README.rst", "r") as fh:
    long_desc = fh.read()

with open('src/erschema/audit/__version__.py') as f:
    for line in f:
        if line.find("__version__") >= 0:
            version = line.split("=")[1].strip()
            version = version.strip('"')
            version = version.strip("'")
            continue

setup(
    name='erschema-audit',
    version=version,
    description='Transform ER models into relational schemas and audit which structural constraints survive the mapping.',
    long_description=long_desc,
    long_description_content_type='text/x-rst',
    license='MIT',
    author='erschema-audit developers',

    # Warning: the folder 'erschema' should NOT have an __init__.py file to avoid conflicts with the same namespace across other packages
    package_dir={'': 'src'},
    packages=['erschema.audit', 'erschema.audit.model', 'erschema.audit.text', 'erschema.audit.transform',
              'erschema.audit.analysis', 'erschema.audit.oracle', 'erschema.audit.tools'],
    entry_points={
        'console_scripts': ['erschema-audit = erschema.audit.cli:main'],
    },

    classifiers=[  # Optional
        # How mature is this project? Common values are
        #   1 - Planning
        #   2 - Pre-Alpha
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        'Development Status :: 3 - Alpha',

        # Indicate who your project is intended for
        'Intended Audience :: Science/Research',
        'Intended Audience :: Education',
        'Operating System :: OS Independent',
        'Topic :: Database',
        'Topic :: Scientific/Engineering',

        'License :: OSI Approved :: MIT License',

        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],
    keywords='entity relationship, er model, relational schema, database design, cardinality, constraints',
    python_requires='>=3.7',
    install_requires=['pandas'],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    })
