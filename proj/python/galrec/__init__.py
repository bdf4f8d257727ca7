from ._galrec import *  # noqa: F401,F403
from ._galrec import __version__  # noqa: F401
