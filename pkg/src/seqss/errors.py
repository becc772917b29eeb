"""Exception hierarchy shared by all seqss modules."""


class SeqssError(Exception):
    """Base class for all protocol simulator errors."""


class SizeError(SeqssError):
    """Qubit count outside the supported range for a single state vector."""


class ProtocolSizeError(SeqssError):
    """Fewer than three players requested; the scheme needs two agents."""


class BackendCapacityError(SeqssError):
    """Requested run does not fit the selected backend's memory bound."""


class EngineError(SeqssError):
    """Internal simulator inconsistency, e.g. a zero-probability branch."""


class BroadcastStateError(SeqssError):
    """Broadcast requested on a run that cannot accept one."""


class RoleError(SeqssError):
    """Party given a role it cannot take (e.g. broadcast to the spymaster)."""


class MissingShareError(SeqssError):
    """Reconstruction attempted before the withheld share was released."""


class TranscriptError(SeqssError):
    """Transcript is malformed, incomplete, or out of order."""
