from ._latsum import *  # noqa: F401,F403
from ._latsum import __doc__  # noqa: F401
