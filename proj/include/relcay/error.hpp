#pragma once

#include <stdexcept>
#include <string>

namespace relcay {

/// Base of every library error. `kind()` is the stable name printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define RELCAY_DEFINE_ERROR(Name, Kind)                                 \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(Kind, what) {}       \
  };

RELCAY_DEFINE_ERROR(ParseError, "parse-error")
RELCAY_DEFINE_ERROR(CapacityError, "capacity-error")
RELCAY_DEFINE_ERROR(GroupMismatchError, "group-mismatch")
RELCAY_DEFINE_ERROR(ConnectionSetError, "connection-set-error")
RELCAY_DEFINE_ERROR(ImproperSubgroupError, "improper-subgroup")
RELCAY_DEFINE_ERROR(NotASubgroupError, "not-a-subgroup")
RELCAY_DEFINE_ERROR(InternalConsistencyError, "internal-consistency")
RELCAY_DEFINE_ERROR(PreconditionError, "precondition-error")
RELCAY_DEFINE_ERROR(UnknownNameError, "unknown-name")

#undef RELCAY_DEFINE_ERROR

}  // namespace relcay
