__version__ = "0.1.0"
__author__ = "Witt Paths Developers"
__credits__ = "Witt Paths Developers"
