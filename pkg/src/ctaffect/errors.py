"""Exception hierarchy shared by all ctaffect modules."""


class CtAffectError(Exception):
    """Base class for every error raised by this package."""


class TaskAlgebraError(CtAffectError, ValueError):
    pass


class DomainMismatch(TaskAlgebraError):
    """An output of the first task has no matching input in the next one."""


class MultivaluedTranspose(TaskAlgebraError):
    """Swapping inputs and outputs would give a multivalued relation."""


class ArityError(TaskAlgebraError):
    pass


class DocumentError(TaskAlgebraError):
    """Malformed substrate/variable/task document."""


class MediumError(CtAffectError, ValueError):
    pass


class NotMeasurable(MediumError):
    pass


class NotPreparable(MediumError):
    pass


class NonBinary(MediumError):
    pass


class PreconditionFailed(MediumError):
    pass


class NotAMixture(MediumError):
    pass


class ClassicalMediumUnsupported(MediumError):
    pass


class EmptyReport(CtAffectError, ValueError):
    pass


class DimensionError(CtAffectError, ValueError):
    pass


class ResourceLimit(CtAffectError, RuntimeError):
    pass


class NoCongruentItems(CtAffectError, ValueError):
    pass


class ConfigInvalid(CtAffectError, ValueError):
    pass
