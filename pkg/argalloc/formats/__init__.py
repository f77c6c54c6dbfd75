from collections import namedtuple

# `framework` is an ArgumentationFramework for tgf/apx and a Network for adfx
InputDocument = namedtuple("InputDocument", ["framework", "source_format", "path"])

INPUT_FORMATS = ("tgf", "apx", "adfx")

FORMAT_OF_EXTENSION = {
    ".tgf": "tgf",
    ".apx": "apx",
    ".adfx": "adfx",
    ".json": "blocks-json",
}


class InvalidInputFile(Exception):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
