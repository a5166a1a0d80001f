from ._secdet import *  # noqa: F401,F403
from ._secdet import __version__  # noqa: F401
