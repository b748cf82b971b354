#pragma once

#include <stdexcept>
#include <string>

namespace singer {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input documents ---
struct SchemaError : Error {
    using Error::Error;
};
struct TopologyError : Error {
    using Error::Error;
};
struct LabelError : Error {
    using Error::Error;
};

// --- queries ---
struct UnknownVertex : Error {
    using Error::Error;
};

// --- Coxeter-theoretic predicates ---
struct InfiniteLabel : Error {
    using Error::Error;
};
struct SubsetTooLarge : Error {
    using Error::Error;
};
struct NotSpherical : Error {
    using Error::Error;
};
struct NotMetricFlag : Error {
    using Error::Error;
};

// --- reduction toolkit ---
struct NotEmptyCircuit : Error {
    using Error::Error;
};
struct LinkMismatch : Error {
    using Error::Error;
};
struct DegenerateGlue : Error {
    using Error::Error;
};
struct AdjacentEuclideanVertices : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};

// --- Andreev ---
struct SimplexInput : Error {
    using Error::Error;
};

// --- certification ---
// Raised when an assertion the underlying theory guarantees fails at run
// time.  Never swallowed: the engine attaches the full witness so the run
// can be inspected (CLI exit code 4 plus an artifact dump).
struct InternalContradiction : Error {
    explicit InternalContradiction(const std::string& what, std::string witness = {})
        : Error(what), witness_json(std::move(witness)) {}
    std::string witness_json;
};

// --- generator ---
struct GenerationFailed : Error {
    using Error::Error;
};

}  // namespace singer
