#External package imports 

from setuptools import setup

#Creating a valid setup.py file

setup(name = 'advopt',
	  description = '''A package for adversarial ergodic optimization on shifts of finite type: exact brackets
	                   for adversarial values, periodic optimization and ground-state certification.''',
	  version = '0.1.0',
	  license = 'MIT',
	  packages=['advopt', 'advopt.utils',
	            'advopt.exceptions', 'advopt.shifts',
	            'advopt.potentials', 'advopt.dynamic',
	            'advopt.cycles', 'advopt.ground_states',
	            'advopt.theta', 'advopt.scenarios' ],
	  install_requires = ['numpy', 'pandas', 'networkx'],
	  entry_points = {'console_scripts': ['advopt=advopt.command_line:main']},
	  scripts = ['bin/advopt.py'],
	  zip_safe = False
	)
