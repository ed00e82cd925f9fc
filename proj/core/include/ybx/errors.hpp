#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Base class for conditions that reject a sample from a property check
/// rather than failing it: the birational maps in the catalog have
/// exceptional sets, and landing on one is not a counterexample.
class SampleRejected : public Error {
public:
    using Error::Error;
};

class SingularInput : public SampleRejected {
public:
    using SampleRejected::SampleRejected;
};

class ParameterCollision : public SampleRejected {
public:
    using SampleRejected::SampleRejected;
};

class ComplementarityViolation : public SampleRejected {
public:
    using SampleRejected::SampleRejected;
};

class DegenerateOutput : public SampleRejected {
public:
    using SampleRejected::SampleRejected;
};

class IsotropicSubspace : public SampleRejected {
public:
    using SampleRejected::SampleRejected;
};

class DegenerateFiber : public SampleRejected {
public:
    using SampleRejected::SampleRejected;
};

/// P*P != P where a projector was required.
class NotAProjector : public Error {
public:
    using Error::Error;
};

/// The sampler hit its rejection cap before collecting enough admissible samples.
class ExhaustedRejections : public Error {
public:
    using Error::Error;
};

/// Malformed input data (bad rational string, bad map file, size mismatch).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ybx
