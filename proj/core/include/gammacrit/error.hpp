#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammacrit {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  IndexOutOfRange,
  EdgeNotInGraph,
  MalformedGraph6,
  MalformedInput,
  NotATree,
  Disconnected,
  Infeasible,
  OrderTooSmall,
  TooLarge,
  EnumerationTruncated,
  Budget,
  BadParams,
  StatusMismatch,
  UnknownTheorem,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gammacrit
