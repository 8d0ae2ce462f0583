from .advopt import *
from .exceptions import *
