// Copyright 2026 The sigpoly Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGPOLY_WORD_HPP_
#define SIGPOLY_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigpoly/error.hpp"

namespace sigpoly {

using Letter = std::uint8_t;

inline constexpr std::size_t kMaxAlphabet = 255;

// A word over the alphabet {1, ..., d}. Letters are stored 1-based, exactly
// as written. The alphabet size is carried by the enclosing TensorElem, not
// by each word.
//
// Words are ordered graded-lexicographically: shorter words first, then
// lexicographically by letters. This is the canonical order for every
// serialization and matrix layout in the library.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) {
      if (l < 1 || l > static_cast<int>(kMaxAlphabet)) {
        throw DomainError("letter " + std::to_string(l) + " out of range");
      }
      letters_.push_back(static_cast<Letter>(l));
    }
  }
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(std::size_t l) { return Word({static_cast<int>(l)}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  // Largest letter, 0 for the empty word.
  Letter max_letter() const {
    return letters_.empty() ? 0 : *std::max_element(begin(), end());
  }

  // The word with its last letter removed.
  Word prefix() const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.end() - 1));
  }
  Word prefix(std::size_t n) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
  }
  Word suffix_from(std::size_t n) const {
    return Word(std::vector<Letter>(letters_.begin() + n, letters_.end()));
  }

  Word appended(Letter l) const {
    Word w = *this;
    w.letters_.push_back(l);
    return w;
  }
  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l;
      h *= 1099511628211ull;
    }
    return h ^ w.size();
  }
};

inline void check_word(const Word& w, std::size_t dim) {
  if (w.max_letter() > dim) {
    throw DomainError("letter " + std::to_string(w.max_letter()) +
                      " outside alphabet {1.." + std::to_string(dim) + "}");
  }
}

// All words of length k over {1..dim} in lexicographic order.
inline std::vector<Word> words_of_length(std::size_t dim, std::size_t k) {
  std::vector<Word> out{Word()};
  for (std::size_t level = 0; level < k; ++level) {
    std::vector<Word> next;
    next.reserve(out.size() * dim);
    for (const Word& w : out) {
      for (std::size_t l = 1; l <= dim; ++l) {
        next.push_back(w.appended(static_cast<Letter>(l)));
      }
    }
    out = std::move(next);
  }
  return out;
}

// All words of length <= k in graded-lex order, starting with e.
inline std::vector<Word> words_up_to(std::size_t dim, std::size_t k) {
  std::vector<Word> out;
  for (std::size_t level = 0; level <= k; ++level) {
    auto ws = words_of_length(dim, level);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

// Text syntax: "e" for the empty word; a digit string ("1323") when the
// alphabet has at most 9 letters; comma-separated integers ("1,13,2")
// otherwise.
inline std::string format_word(const Word& w, std::size_t dim) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (dim > 9 && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

inline Word parse_word(std::string_view text, std::size_t dim) {
  if (text == "e") return Word();
  if (text.empty()) throw ParseError("empty word text (use \"e\")");
  std::vector<Letter> letters;
  auto push = [&](unsigned long v) {
    if (v < 1 || v > dim) {
      throw DomainError("letter " + std::to_string(v) + " outside alphabet {1.." +
                        std::to_string(dim) + "}");
    }
    letters.push_back(static_cast<Letter>(v));
  };
  if (dim <= 9) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError("malformed word '" + std::string(text) + "'");
      }
      push(static_cast<unsigned long>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(pos, comma - pos);
      if (tok.empty() || tok.size() > 3 ||
          !std::all_of(tok.begin(), tok.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("malformed word '" + std::string(text) + "'");
      }
      push(std::stoul(std::string(tok)));
      pos = comma + 1;
    }
  }
  return Word(std::move(letters));
}

}  // namespace sigpoly

#endif  // SIGPOLY_WORD_HPP_
