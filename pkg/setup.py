from setuptools import find_packages, setup

with open('requirements.txt') as f:
    requirements = [line.strip() for line in f if line.strip() and not line.startswith('pytest')]

setup(
    name='power-graph-lab',
    version='0.1.0',
    description='Power graphs of finite groups: forbidden induced subgraphs and the group structure behind them',
    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    py_modules=['main', 'run'],
    python_requires='>=3.9',
    install_requires=requirements,
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['pg = main:main']},
)
