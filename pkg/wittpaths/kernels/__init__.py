from .numth import MultiDegree
from .series import TruncatedSeries
