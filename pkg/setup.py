from setuptools import setup

setup(
    name='quantum-pencils',
    version='1.0.0',
    description='Exact verification of quantized Poisson pencils, '
                'R-matrices and braided modules.',

    # Author details
    author='The quantum-pencils developers',
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        # How mature is this project? Common values are
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        'Development Status :: 4 - Beta',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3.9',
    ],
    python_requires='>=3.9, <3.10',
    # What does your project relate to?
    keywords='poisson pencil quantum group yang-baxter hilbert series '
             'computer algebra',

    # You can just specify the packages manually here if your project is
    # simple. Or you can use find_packages().
    packages=['quantum_pencils'],
    package_dir={'quantum_pencils': 'quantum_pencils'},

    package_data={'quantum_pencils': ['../README.md']},
    include_package_data=True,

    entry_points={
        'console_scripts': [
            'quantum-pencils=quantum_pencils.run:main',
        ],
    },

    # List run-time dependencies here.  These will be installed by pip when
    # your project is installed. For an analysis of "install_requires" vs pip's
    # requirements files see:
    # https://packaging.python.org/en/latest/requirements.html
    # (We actually use conda for dependency management)
    # install_requires=['sympy', 'numpy', 'pandas', 'tqdm', 'parse',
    #                   'ballpark'],
)
