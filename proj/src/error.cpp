#include "machina/error.hpp"

namespace machina {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::missing_entry: return "MissingEntry";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::empty_alphabet: return "EmptyAlphabet";
    case Errc::shape_error: return "ShapeError";
    case Errc::endpoint_mismatch: return "EndpointMismatch";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::empty_word_on_mealy: return "EmptyWordOnMealy";
    case Errc::letter_out_of_alphabet: return "LetterOutOfAlphabet";
    case Errc::enumeration_too_large: return "EnumerationTooLarge";
    case Errc::not_soft: return "NotSoft";
    case Errc::not_a_homomorphism: return "NotAHomomorphism";
    case Errc::no_such_cell: return "NoSuchCell";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::version_mismatch: return "VersionMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string where)
    : std::runtime_error(where.empty() ? message : where + ": " + message),
      code_(code),
      message_(message),
      where_(std::move(where)) {}

}  // namespace machina
