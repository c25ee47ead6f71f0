// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fsmcov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (bad JSON, bad DOT, wrong types, missing keys).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A structurally well-formed document that violates a model invariant,
/// e.g. start vertex not declared, duplicate edge id, empty vertex set.
class ModelError : public Error {
public:
    using Error::Error;
};

/// Two edges leaving the same vertex carry the same input symbol.
class DeterminismError : public ModelError {
public:
    using ModelError::ModelError;
};

/// An edge id that does not exist in the graph.
class UnknownEdgeError : public Error {
public:
    using Error::Error;
};

/// An edge sequence that breaks the adjacency invariant.
class InvalidPathError : public Error {
public:
    using Error::Error;
};

/// The requested criterion cannot be evaluated on this graph.
class CriterionInapplicableError : public Error {
public:
    using Error::Error;
};

/// All-path requirements on a graph that contains a cycle.
class CyclicGraphError : public CriterionInapplicableError {
public:
    using CriterionInapplicableError::CriterionInapplicableError;
};

/// W-method machinery on a graph without complete input/output labels.
class MealyLabelsMissingError : public CriterionInapplicableError {
public:
    using CriterionInapplicableError::CriterionInapplicableError;
};

/// Some pair of states cannot be told apart by any input sequence.
class IndistinguishableStatesError : public CriterionInapplicableError {
public:
    using CriterionInapplicableError::CriterionInapplicableError;
};

/// An enumeration or construction exceeded its configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A requirement cannot be embedded in a walk under the requested anchors.
class UnsatisfiableError : public Error {
public:
    using Error::Error;
};

/// Incompatible lab configuration (criterion pair vs. graph distribution).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Relation lookup outside the tabulated criteria.
class UnknownPairError : public Error {
public:
    using Error::Error;
};

}  // namespace fsmcov
