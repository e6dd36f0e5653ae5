class HyperSpectraError(Exception):
    """Базовый класс для ошибок приложения"""
    code = "HyperSpectraError"
    exit_code = 1


# --- Входные данные ---

class HypergraphValidationError(HyperSpectraError):
    """Ошибка валидации входных данных"""
    code = "ValidationError"


class EmptyEdgeError(HypergraphValidationError):
    code = "EmptyEdge"


class VertexOutOfRangeError(HypergraphValidationError):
    code = "VertexOutOfRange"


class NegativeWeightError(HypergraphValidationError):
    code = "NegativeWeight"


class DuplicateEdgeError(HypergraphValidationError):
    code = "DuplicateEdge"


class RepeatedVertexError(HypergraphValidationError):
    """Вершина встречается в ребре дважды"""
    code = "RepeatedVertex"


class SingletonEdgeError(HypergraphValidationError):
    """Ребро из одной вершины: |e|-1 = 0 в знаменателе матрицы смежности"""
    code = "SingletonEdge"


class EmptyVertexSetError(HypergraphValidationError):
    code = "EmptyVertexSet"


class TooSmallError(HypergraphValidationError):
    code = "TooSmall"


class BadArityError(HypergraphValidationError):
    code = "BadArity"


class ModeArityMismatchError(HypergraphValidationError):
    code = "ModeArityMismatch"


class BadLoosenessError(HypergraphValidationError):
    code = "BadLooseness"


class DegenerateCycleError(HypergraphValidationError):
    code = "DegenerateCycle"


class ArityError(HypergraphValidationError):
    code = "ArityError"


class InsufficientVerticesError(HypergraphValidationError):
    code = "InsufficientVertices"


class BadCardinalitySetError(HypergraphValidationError):
    code = "BadCardinalitySet"


class PartitionMismatchError(HypergraphValidationError):
    code = "PartitionMismatch"


class CountMismatchError(HypergraphValidationError):
    code = "CountMismatch"


class MalformedPartitionError(HypergraphValidationError):
    code = "MalformedPartition"


class BadSubsetSizeError(HypergraphValidationError):
    code = "BadSubsetSize"


class SizeMismatchError(HypergraphValidationError):
    code = "SizeMismatch"


# --- Нарушение условий теорем ---

class HypothesisError(HyperSpectraError):
    """Гиперграф не удовлетворяет условиям утверждения"""
    code = "HypothesisError"


class NotRegularError(HypothesisError):
    code = "NotRegular"


class NotConnectedError(HypothesisError):
    code = "NotConnected"


class NotEquitableError(HypothesisError):
    code = "NotEquitable"


class NonConstantBlockError(HypothesisError):
    """Блок матрицы смежности короны не постоянен"""
    code = "NonConstantBlock"


class HypothesisViolatedError(HypothesisError):
    code = "HypothesisViolated"


class NotSwitchableError(HypothesisError):
    code = "NotSwitchable"


class UnsupportedRegimeError(HypothesisError):
    code = "UnsupportedRegime"


# --- Численные методы ---

class NumericalError(HyperSpectraError):
    """Ошибка численного метода"""
    code = "NumericalError"


class NotSymmetricError(NumericalError):
    code = "NotSymmetric"


class NoConvergenceError(NumericalError):
    code = "NoConvergence"


# --- Ограничения перебора ---

class GuardError(HyperSpectraError):
    """Превышен лимит перебора"""
    code = "GuardError"
    exit_code = 3


class TooLargeError(GuardError):
    code = "TooLarge"


# --- Файлы ---

class FileProcessingError(HyperSpectraError):
    """Ошибка обработки файла"""
    code = "FileProcessingError"


class FormatError(FileProcessingError):
    code = "FormatError"


class FileNotFoundProcessingError(FileProcessingError):
    code = "FileNotFound"


class UnknownTheoremError(HyperSpectraError):
    code = "UnknownTheorem"


class UsageError(HyperSpectraError):
    """Неверные аргументы командной строки"""
    code = "UsageError"
