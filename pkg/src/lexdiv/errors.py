"""Exception hierarchy shared by the store, mapping, metrics and I/O layers.

Every error carries a short machine-readable ``code`` so the service API and
the exchange-format validator can surface failures uniformly.
"""


class LexdbError(Exception):
    code = "ERROR"

    def __init__(self, message="", location=None):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.location = location


# --- concept-store ---------------------------------------------------------

class DuplicateCode(LexdbError):
    code = "DUPLICATE_CODE"


class MalformedCode(LexdbError):
    code = "MALFORMED_CODE"


class UnknownRef(LexdbError):
    code = "UNKNOWN_REF"


class UnknownLanguage(UnknownRef):
    code = "UNKNOWN_LANGUAGE"


class SelfLoop(LexdbError):
    code = "SELF_LOOP"


class CycleError(LexdbError):
    code = "CYCLE"


class DuplicateRelation(LexdbError):
    code = "DUPLICATE_RELATION"


class GapConflict(LexdbError):
    code = "GAP_CONFLICT"


class SenseConflict(LexdbError):
    code = "SENSE_CONFLICT"


class DuplicateGap(LexdbError):
    code = "DUPLICATE_GAP"


class DuplicateSense(LexdbError):
    code = "DUPLICATE_SENSE"


class CrossLanguageParent(LexdbError):
    code = "CROSS_LANGUAGE_PARENT"


class UnrootedLocal(LexdbError):
    code = "UNROOTED_LOCAL"


class LanguageMismatch(LexdbError):
    code = "LANGUAGE_MISMATCH"


class SelfLink(LexdbError):
    code = "SELF_LINK"


# --- bias-metrics ----------------------------------------------------------

class TooFewLanguages(LexdbError):
    code = "TOO_FEW_LANGUAGES"


class MixedTasks(LexdbError):
    code = "MIXED_TASKS"


class DuplicateLanguage(LexdbError):
    code = "DUPLICATE_LANGUAGE"


class InvalidShares(LexdbError):
    code = "INVALID_SHARES"


class InvalidValue(LexdbError):
    code = "INVALID_VALUE"


class NoCommonSubsumer(LexdbError):
    code = "NO_COMMON_SUBSUMER"


class EmptyInput(LexdbError):
    code = "EMPTY_INPUT"


# --- crosslingual-mapping --------------------------------------------------

class NotSubset(LexdbError):
    code = "NOT_SUBSET"


# --- lexicon-io ------------------------------------------------------------

class ParseError(LexdbError):
    code = "PARSE_ERROR"


class ValidationFailed(LexdbError):
    code = "VALIDATION_FAILED"

    def __init__(self, diagnostics, message="document failed validation"):
        super().__init__(message)
        self.diagnostics = diagnostics


class MergeConflict(LexdbError):
    code = "MERGE_CONFLICT"
