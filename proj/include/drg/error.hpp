#pragma once

#include <stdexcept>
#include <string>

namespace drg {

// Precondition or input-format violation.  The message names what failed.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A search ran out of its time or size budget.  Callers turn this into an
// "unknown" verdict, never into a yes/no.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

}  // namespace drg
