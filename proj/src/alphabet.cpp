#include "machina/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "machina/error.hpp"

namespace machina {

Alphabet::Alphabet() : data_(std::make_shared<const Data>()) {}

Alphabet::Alphabet(std::vector<std::string> symbols, std::string name) {
  if (symbols.empty()) {
    throw Error(Errc::empty_alphabet, "alphabet must have at least one symbol", name);
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& s : symbols) {
    if (!seen.insert(s).second) {
      throw Error(Errc::duplicate_name, "duplicate symbol '" + s + "'", name);
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(name), std::move(symbols)});
}

std::optional<Letter> Alphabet::index_of(std::string_view symbol) const {
  const auto& symbols = data_->symbols;
  auto it = std::find(symbols.begin(), symbols.end(), symbol);
  if (it == symbols.end()) return std::nullopt;
  return static_cast<Letter>(it - symbols.begin());
}

Alphabet digits(std::size_t n, std::string name) {
  std::vector<std::string> symbols;
  symbols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) symbols.push_back(std::to_string(i));
  return Alphabet(std::move(symbols), std::move(name));
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word word;
  auto flush = [&](std::string_view token) {
    if (token.empty()) return;
    if (auto a = alphabet.index_of(token)) {
      word.push_back(*a);
      return;
    }
    for (char c : token) {
      auto a = alphabet.index_of(std::string_view(&c, 1));
      if (!a) {
        throw Error(Errc::letter_out_of_alphabet,
                    "'" + std::string(token) + "' is not a word over the alphabet");
      }
      word.push_back(*a);
    }
  };
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      flush(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  return word;
}

std::string format_word(const Alphabet& alphabet, const Word& word, std::string_view separator) {
  std::string text;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) text += separator;
    text += alphabet.symbol(word[i]);
  }
  return text;
}

}  // namespace machina
