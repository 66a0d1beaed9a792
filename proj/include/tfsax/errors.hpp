#pragma once

#include <stdexcept>
#include <string>

namespace tfsax {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input standard deviation below 1e-12; normalization is undefined.
class ConstantSeries : public Error {
public:
    using Error::Error;
};

/// Segment count outside [1, n].
class InvalidW : public Error {
public:
    using Error::Error;
};

/// Two series (or words) of different lengths where equal lengths are required.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Alphabet size outside the supported range.
class InvalidAlpha : public Error {
public:
    using Error::Error;
};

/// Symbol index outside [1, alpha].
class SymbolOutOfRange : public Error {
public:
    using Error::Error;
};

/// Words with incompatible (n, w, alpha, alpha_t) parameters.
class ParamMismatch : public Error {
public:
    using Error::Error;
};

/// Trend alphabet size outside [2, 6].
class UnsupportedTrendAlpha : public Error {
public:
    using Error::Error;
};

/// TLB requested for a pair at Euclidean distance zero.
class ZeroEuclidean : public Error {
public:
    using Error::Error;
};

class EmptyDataset : public Error {
public:
    using Error::Error;
};

/// Malformed input text; the message carries the file and line number.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Rows of inconsistent length within one dataset file.
class RaggedRows : public ParseError {
public:
    using ParseError::ParseError;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace tfsax
