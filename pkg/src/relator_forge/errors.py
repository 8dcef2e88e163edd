"""Exception hierarchy shared by all modules."""


class RelatorForgeError(Exception):
    pass


class UnknownGenerator(RelatorForgeError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CommutingPair(RelatorForgeError, ValueError):
    pass


class ZeroExponent(RelatorForgeError, ValueError):
    pass


class ZeroParameter(RelatorForgeError, ValueError):
    pass


class SignatureMismatch(RelatorForgeError, ValueError):
    pass


class NonzeroExponentSum(RelatorForgeError, ValueError):
    pass


class SplitFailure(RelatorForgeError):
    """Raised when a relator schema mixes residue classes modulo ``n``."""

    def __init__(self, schema, n):
        self.schema = schema
        self.n = n
        super().__init__(f"schema {schema} mixes residue classes mod {n}")


class WindowTooSmall(RelatorForgeError, ValueError):
    pass


class NotBS(RelatorForgeError, ValueError):
    pass


class NoCertificate(RelatorForgeError):
    pass


class ParseError(RelatorForgeError, ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
