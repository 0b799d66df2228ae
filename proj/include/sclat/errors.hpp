#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sclat {

using Index = std::size_t;

/// Ordered element identifiers, shared between every relation, order and
/// profile built over the same ground set.
using Labels = std::shared_ptr<const std::vector<std::string>>;

inline Labels make_labels(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data that cannot be interpreted (bad JSON shape, unknown names, ...).
class InputError : public Error {
public:
    using Error::Error;
};

enum class AxiomViolation { NotReflexive, NotAntisymmetric, NotTransitive };

inline const char* to_string(AxiomViolation v) {
    switch (v) {
    case AxiomViolation::NotReflexive: return "NotReflexive";
    case AxiomViolation::NotAntisymmetric: return "NotAntisymmetric";
    case AxiomViolation::NotTransitive: return "NotTransitive";
    }
    return "?";
}

/// A relation failed one of the partial-order axioms; `witness` holds the
/// offending element (reflexivity), pair (antisymmetry) or triple
/// (transitivity).
class PosetAxiomError : public InputError {
public:
    PosetAxiomError(AxiomViolation kind, std::vector<std::string> witness, const std::string& what)
        : InputError(what), kind_(kind), witness_(std::move(witness)) {}

    AxiomViolation kind() const noexcept { return kind_; }
    const std::vector<std::string>& witness() const noexcept { return witness_; }

private:
    AxiomViolation kind_;
    std::vector<std::string> witness_;
};

class MissingElement : public InputError {
public:
    explicit MissingElement(std::string name)
        : InputError("missing element: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownElement : public InputError {
public:
    explicit UnknownElement(std::string name)
        : InputError("unknown element: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class SyntaxError : public InputError {
public:
    using InputError::InputError;
};

/// Requested instance exceeds an enumeration guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// A chain query between two alternatives that are not ordered the way the
/// query requires.
class NotComparable : public Error {
public:
    NotComparable(std::string from, std::string to)
        : Error("not comparable in the required direction: " + from + " -> " + to) {}
};

/// A relation with a weak path from a to b whose reverse pair is strict.
/// `cycle` lists the path a = cycle.front(), ..., cycle.back() = b.
class NotConsistent : public Error {
public:
    NotConsistent(std::vector<Index> cycle, const std::string& what)
        : Error(what), cycle_(std::move(cycle)) {}
    const std::vector<Index>& cycle() const noexcept { return cycle_; }

private:
    std::vector<Index> cycle_;
};

class NoJoin : public NotConsistent {
public:
    using NotConsistent::NotConsistent;
};

class NoMeet : public NotConsistent {
public:
    using NotConsistent::NotConsistent;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class UniverseTooLarge : public Error {
public:
    using Error::Error;
};

class NotAForkPoset : public Error {
public:
    using Error::Error;
};

/// Raised when a construction that a theorem guarantees comes up empty.
/// Always a bug, never a user error.
class InternalSearchExhausted : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sclat
