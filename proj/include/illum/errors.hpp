#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace illum {

/// Bad input: malformed documents, invalid normal sets, violated preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::optional<std::size_t> facet = std::nullopt)
        : std::runtime_error(what), facet_(facet) {}

    /// Index of the offending facet in input order, when the error is tied to one.
    std::optional<std::size_t> facet() const { return facet_; }

private:
    std::optional<std::size_t> facet_;
};

/// An internal invariant failed. Either a bug or a counterexample to the
/// geometric claims the construction relies on; never patched over.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace illum
