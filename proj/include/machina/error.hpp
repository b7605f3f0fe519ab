#ifndef MACHINA_ERROR_HPP
#define MACHINA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace machina {

enum class Errc {
  missing_entry,
  unknown_symbol,
  duplicate_name,
  empty_alphabet,
  shape_error,
  endpoint_mismatch,
  kind_mismatch,
  empty_word_on_mealy,
  letter_out_of_alphabet,
  enumeration_too_large,
  not_soft,
  not_a_homomorphism,
  no_such_cell,
  invalid_argument,
  syntax_error,
  version_mismatch,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `where()` is a dotted field path
/// (e.g. "delta.q1.1") or a "line N" locator when one is known.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string where = {});

  Errc code() const noexcept { return code_; }
  const std::string& where() const noexcept { return where_; }
  const std::string& message() const noexcept { return message_; }

  /// The same error located inside `outer` (e.g. a file name).
  Error within(const std::string& outer) const {
    return Error(code_, message_, where_.empty() ? outer : outer + ": " + where_);
  }

 private:
  Errc code_;
  std::string message_;
  std::string where_;
};

}  // namespace machina

#endif  // MACHINA_ERROR_HPP
