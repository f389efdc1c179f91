class KIndepError(Exception):
    '''
    Base class for every error raised by the engines.
    '''

class InputError(KIndepError, ValueError):
    '''
    The caller supplied something the operation cannot accept. The CLI maps
    these to exit code 2.
    '''

class NotGraphicalError(InputError):
    pass

class TrivialSequenceError(InputError):
    pass

class EmptySequenceError(InputError):
    pass

class DegreeOverflowError(InputError):
    pass

class InvalidProfileError(InputError):
    pass

class InvalidStepError(InputError):
    pass

class InvalidScriptError(InputError):
    pass

class GraphFormatError(InputError):
    pass

class CoveringParameterError(InputError):
    pass

class PriorsFileError(InputError):
    pass

class ResourceLimitError(KIndepError):
    '''
    A size guard on one of the exhaustive oracles was exceeded. The CLI maps
    these to exit code 3.
    '''
