"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures without a
lookup table: 1 for malformed input, 2 for size caps.
"""


class TreeIdealsError(Exception):
    exit_code = 1


class ParseError(TreeIdealsError):
    pass


class SelfLoop(ParseError):
    pass


class TooManyVertices(TreeIdealsError):
    exit_code = 2


class HeightTooLarge(TreeIdealsError):
    exit_code = 2


class TooLargeForEnumeration(TreeIdealsError):
    exit_code = 2


class TooLargeForHochster(TreeIdealsError):
    exit_code = 2


class NotATree(TreeIdealsError):
    pass


class NotBipartite(TreeIdealsError):
    pass
