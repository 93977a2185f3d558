# __init__.py
# Marks rogers_ramanujan as a package and keeps library logging quiet until a caller opts in.
# Package names use underscores; the project name in pyproject.toml uses dashes (rogers-ramanujan).

from loguru import logger

logger.disable("rogers_ramanujan")

__version__ = "0.1.0"
