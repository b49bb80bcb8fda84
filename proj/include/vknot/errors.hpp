#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vknot {

enum class errc {
  malformed_token,
  duplicate_pass,
  unpaired_pass,
  sign_mismatch,
  unknown_crossing,
  zero_n,
  non_positive_n,
  stale_site,
  duplicate_name,
  unknown_format,
  io_error,
  internal_inconsistency,
};

/// Library-wide error type. `index` is a token index or a 1-based line number
/// when the error refers to a position in textual input, `npos` otherwise.
/// `internal_inconsistency` signals an implementation bug, never bad input.
class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(errc kind, std::string message, std::size_t index = npos)
      : std::runtime_error(std::move(message)), kind_(kind), index_(index) {}

  errc kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }

private:
  errc kind_;
  std::size_t index_;
};

inline Error internal_error(std::string message) {
  return Error(errc::internal_inconsistency, std::move(message));
}

} // namespace vknot
