from ._boolcube import *  # noqa: F401,F403
from ._boolcube import __version__  # noqa: F401
