from . import current, embedding, prism, search

# registration order is the order shown in --help
COMMAND_MODULES = (embedding, current, prism, search)

__all__ = ["COMMAND_MODULES"]
