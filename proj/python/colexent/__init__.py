"""Degree-based graph entropy, colex graphs, and exhaustive extremal verification.

The heavy lifting lives in the compiled extension ``colexent._core``; this
package re-exports its API.
"""

from colexent._core import *  # noqa: F401,F403
from colexent._core import __version__  # noqa: F401
