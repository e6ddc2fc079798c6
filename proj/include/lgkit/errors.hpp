#pragma once

#include <stdexcept>
#include <string>

namespace lgkit {

// Malformed text input (braid words, polynomial strings, fixture files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A denominator vanished under a root-of-unity substitution.
class PoleAtRoot : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured work limit (crossing budget, range budget) was exceeded.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A (1,1)-tangle bracket that is not a multiple of the identity.
class NotScalar : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lgkit
