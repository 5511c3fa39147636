#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace synth {

/// Base class for every domain error raised by the library. Each error
/// carries a stable canonical name that front ends surface verbatim
/// (e.g. as {"error": "StratificationError"} on the CLI).
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define SYNTH_DEFINE_ERROR(ClassName)                       \
  struct ClassName final : Error {                          \
    explicit ClassName(const std::string& message)          \
        : Error(#ClassName, message) {}                     \
  }

// forms
SYNTH_DEFINE_ERROR(IllFormed);
SYNTH_DEFINE_ERROR(UnknownSymbol);
SYNTH_DEFINE_ERROR(InvalidStructure);

// relations
SYNTH_DEFINE_ERROR(StratificationError);
SYNTH_DEFINE_ERROR(SearchBudgetExceeded);
SYNTH_DEFINE_ERROR(NotASubrelation);
SYNTH_DEFINE_ERROR(SymbolClash);
SYNTH_DEFINE_ERROR(NotEnumerable);

// foundation
SYNTH_DEFINE_ERROR(ClosednessViolation);
SYNTH_DEFINE_ERROR(NoSuccessor);
SYNTH_DEFINE_ERROR(ChoiceOutsideSystem);
SYNTH_DEFINE_ERROR(DepthMismatch);
SYNTH_DEFINE_ERROR(HandleMismatch);
SYNTH_DEFINE_ERROR(NotOnChain);

// reals
SYNTH_DEFINE_ERROR(OutOfRange);

// constituents
SYNTH_DEFINE_ERROR(UnboundVariable);
SYNTH_DEFINE_ERROR(ArityMismatch);
SYNTH_DEFINE_ERROR(UnknownPredicate);
SYNTH_DEFINE_ERROR(DepthBudgetExceeded);
SYNTH_DEFINE_ERROR(EnumerationBudgetExceeded);
SYNTH_DEFINE_ERROR(DepthZero);

// modal_topology
SYNTH_DEFINE_ERROR(UnknownAtom);
SYNTH_DEFINE_ERROR(SizeBudgetExceeded);
SYNTH_DEFINE_ERROR(InvalidPoset);
SYNTH_DEFINE_ERROR(InternalCheckFailure);

// parsing / registry
SYNTH_DEFINE_ERROR(ParseError);
SYNTH_DEFINE_ERROR(UnknownName);

#undef SYNTH_DEFINE_ERROR

}  // namespace synth
