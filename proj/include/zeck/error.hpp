#pragma once

#include <stdexcept>
#include <string>

namespace zeck {

enum class errc {
  too_short,
  leading_zero,
  negative_entry,
  not_in_super_collection,
  not_a_subcollection,
  internal_inconsistency,
  invalid_candidate,
  no_sign_change,
  parse_error,
  empty_input,
  usage_error,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::too_short: return "TooShort";
    case errc::leading_zero: return "LeadingZero";
    case errc::negative_entry: return "NegativeEntry";
    case errc::not_in_super_collection: return "NotInSuperCollection";
    case errc::not_a_subcollection: return "SubcollectionError";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::invalid_candidate: return "InvalidCandidate";
    case errc::no_sign_change: return "NoSignChange";
    case errc::parse_error: return "ParseError";
    case errc::empty_input: return "EmptyInput";
    case errc::usage_error: return "UsageError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace zeck
