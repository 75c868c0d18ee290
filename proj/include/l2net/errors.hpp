#pragma once

#include <stdexcept>
#include <string>

namespace l2net {

// Base for every error the library raises. `kind()` is a stable short name
// the CLI and the Python bindings report.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define L2NET_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

// input handling
L2NET_DEFINE_ERROR(ParseError)
L2NET_DEFINE_ERROR(InvalidNetwork)
L2NET_DEFINE_ERROR(InvalidMatrix)
L2NET_DEFINE_ERROR(UnknownLeaf)
L2NET_DEFINE_ERROR(TaxaMismatch)
L2NET_DEFINE_ERROR(TaxonCollision)

// structure
L2NET_DEFINE_ERROR(NotPendant)
L2NET_DEFINE_ERROR(UnrecognizedShape)
L2NET_DEFINE_ERROR(IsTree)
L2NET_DEFINE_ERROR(LevelTooHigh)
L2NET_DEFINE_ERROR(TooLarge)

// matrix analysis
L2NET_DEFINE_ERROR(NotACherry)
L2NET_DEFINE_ERROR(CherriesPresent)
L2NET_DEFINE_ERROR(EmptySide)
L2NET_DEFINE_ERROR(TooLargeForExhaustive)
L2NET_DEFINE_ERROR(NoNontrivialSplit)
L2NET_DEFINE_ERROR(NoConsistentForm)
L2NET_DEFINE_ERROR(BranchBudgetExceeded)
L2NET_DEFINE_ERROR(NotGenSideCovered)

// alt-path structures
L2NET_DEFINE_ERROR(InvalidTree)
L2NET_DEFINE_ERROR(InvalidColoring)
L2NET_DEFINE_ERROR(InvalidEmbedding)

// generators
L2NET_DEFINE_ERROR(InfeasibleParams)

#undef L2NET_DEFINE_ERROR

}  // namespace l2net
