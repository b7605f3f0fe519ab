#ifndef MACHINA_ALPHABET_HPP
#define MACHINA_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace machina {

using Letter = std::uint32_t;
using StateIndex = std::uint32_t;

/// A finite, nonempty, ordered set of symbol names. Symbol order is fixed at
/// construction and is the iteration order everywhere else in the library.
///
/// Two alphabets are equal when their symbol lists are equal; the name is a
/// display label and takes no part in endpoint matching.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> symbols, std::string name = {});

  std::size_t size() const noexcept { return data_->symbols.size(); }
  const std::string& name() const noexcept { return data_->name; }
  const std::vector<std::string>& symbols() const noexcept { return data_->symbols; }
  const std::string& symbol(Letter a) const { return data_->symbols.at(a); }
  std::optional<Letter> index_of(std::string_view symbol) const;

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.data_ == y.data_ || x.data_->symbols == y.data_->symbols;
  }

 private:
  struct Data {
    std::string name;
    std::vector<std::string> symbols;
  };
  std::shared_ptr<const Data> data_;
};

/// Alphabet with symbols "0", "1", ..., "n-1".
Alphabet digits(std::size_t n, std::string name = {});

using Word = std::vector<Letter>;

/// Parses whitespace- or comma-separated symbol names. A token that is not a
/// symbol is split into characters when every character is a one-character
/// symbol, so "101" reads as [1,0,1] over {0,1}.
Word parse_word(const Alphabet& alphabet, std::string_view text);

std::string format_word(const Alphabet& alphabet, const Word& word,
                        std::string_view separator = " ");

}  // namespace machina

#endif  // MACHINA_ALPHABET_HPP
