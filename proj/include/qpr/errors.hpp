#pragma once

#include <stdexcept>
#include <string>

namespace qpr {

// Raised by certify_negativity when a frame/dual pair exhibits no negativity
// anywhere. A validated pair can never trigger this; it signals a numerical
// bug or an invalid pairing, not a counterexample.
class NoNegativityError : public std::runtime_error {
 public:
  explicit NoNegativityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpr
