#ifndef APSP_ERRORS_HPP
#define APSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apsp {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A stored string must be non-empty.
class EmptyStringError : public Error {
 public:
  EmptyStringError() : Error("empty string") {}
};

/// The alive set holds each content at most once.
class DuplicateStringError : public Error {
 public:
  explicit DuplicateStringError(const std::string& content)
      : Error("duplicate string: " + content) {}
};

/// The referenced id is not alive (never issued, or already deleted).
class UnknownIdError : public Error {
 public:
  explicit UnknownIdError(std::uint64_t id)
      : Error("unknown id: " + std::to_string(id)) {}
};

/// A compact-trie handle whose forwarding chain cannot be resolved.
/// Indicates an internal bookkeeping bug, not a user error.
class DeadHandleError : public Error {
 public:
  DeadHandleError() : Error("dead compact-trie handle") {}
};

}  // namespace apsp

#endif  // APSP_ERRORS_HPP
