"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes (input/parse -> 2, internal check -> 3,
budget -> 4), and the service maps them onto HTTP error payloads.
"""


class MultabError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MultabError):
    """A caller-supplied value violates a documented precondition."""


class ParseError(MultabError):
    """A text artifact (graph file, certificate file) is malformed."""


class BudgetError(MultabError):
    """A computation would exceed its configured resource budget."""


class ConfigError(MultabError):
    """A profile or threshold configuration is internally inconsistent."""


class InternalCheckError(MultabError):
    """A self-check that should never fail did fail; this is a bug trap."""
