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

// JSON and text serialization. JSON layouts:
//
//   TensorElem     {"dim": d, "terms": [{"word": "12", "coeff": "1/2"}, ...]}
//   Poly           {"nvars": d, "terms": [{"exps": [2, 0], "coeff": "3"}, ...]}
//   PolynomialMap  {"domain_dim": d, "codomain_dim": m, "components": [Poly]}
//   Path           {"dimension": d, "segments": [{"components": [Poly]}]}
//   Signature      {"dimension": d, "level": N, "terms": [...]}
//   LetterMap      {"source_dim": m, "target_dim": d, "images": [TensorElem]}
//   LevelMatrix    {"row_words": [...], "col_words": [...], "rows": [[...]]}
//
// Terms are written in graded-lex order and rationals as "p/q" or "p", so
// serialization is canonical: equal values produce identical bytes.

#ifndef SIGPOLY_IO_HPP_
#define SIGPOLY_IO_HPP_

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sigpoly/error.hpp"
#include "sigpoly/poly.hpp"
#include "sigpoly/polymap.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/signature.hpp"
#include "sigpoly/tensor.hpp"
#include "sigpoly/word.hpp"
#include "sigpoly/zinbiel.hpp"

namespace sigpoly {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::size_t positive_size(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw ParseError(std::string("field \"") + key +
                     "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

inline const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return v;
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw ParseError("coefficient must be a \"p/q\" string or an integer");
}

// Rethrows nlohmann errors as ParseError so callers see one error family.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

// --- TensorElem -----------------------------------------------------------

inline json terms_to_json(const TensorElem& t) {
  json terms = json::array();
  for (const auto& [w, c] : t.terms()) {
    terms.push_back({{"word", format_word(w, t.dim())},
                     {"coeff", format_rational(c)}});
  }
  return terms;
}

inline TensorElem terms_from_json(const json& terms, std::size_t dim) {
  return detail::guarded([&] {
    if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
    TensorElem t(dim);
    for (const json& term : terms) {
      const json& w = detail::field(term, "word");
      if (!w.is_string()) throw ParseError("\"word\" must be a string");
      t.add_term(parse_word(w.get<std::string>(), dim),
                 detail::rational_from_json(detail::field(term, "coeff")));
    }
    return t;
  });
}

inline json to_json(const TensorElem& t) {
  return {{"dim", t.dim()}, {"terms", terms_to_json(t)}};
}

inline TensorElem tensor_from_json(const json& j) {
  return terms_from_json(detail::field(j, "terms"), detail::positive_size(j, "dim"));
}

// --- Poly -----------------------------------------------------------------

inline json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exps", e}, {"coeff", format_rational(c)}});
  }
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

inline Poly poly_from_json(const json& j) {
  return detail::guarded([&] {
    Poly p(detail::positive_size(j, "nvars"));
    for (const json& term : detail::array_field(j, "terms")) {
      const json& exps = detail::field(term, "exps");
      if (!exps.is_array()) throw ParseError("\"exps\" must be an array");
      Exponents e;
      for (const json& k : exps) {
        if (!k.is_number_unsigned()) {
          throw ParseError("exponents must be nonnegative integers");
        }
        e.push_back(k.get<std::uint32_t>());
      }
      p.add_term(e, detail::rational_from_json(detail::field(term, "coeff")));
    }
    return p;
  });
}

// --- PolynomialMap ---------------------------------------------------------

inline json to_json(const PolynomialMap& p) {
  json comps = json::array();
  for (const Poly& c : p.components()) comps.push_back(to_json(c));
  return {{"domain_dim", p.domain_dim()},
          {"codomain_dim", p.codomain_dim()},
          {"components", comps}};
}

inline PolynomialMap map_from_json(const json& j) {
  return detail::guarded([&] {
    const std::size_t d = detail::positive_size(j, "domain_dim");
    const std::size_t m = detail::positive_size(j, "codomain_dim");
    std::vector<Poly> comps;
    for (const json& c : detail::array_field(j, "components")) {
      comps.push_back(poly_from_json(c));
    }
    if (comps.size() != m) {
      throw ParseError("codomain_dim is " + std::to_string(m) + " but " +
                       std::to_string(comps.size()) + " components given");
    }
    return PolynomialMap(d, std::move(comps));
  });
}

// --- Paths and signatures --------------------------------------------------

inline json to_json(const PiecewisePolyPath& path) {
  json segs = json::array();
  for (const PathSegment& s : path.segments()) {
    json comps = json::array();
    for (const Poly& c : s.components()) comps.push_back(to_json(c));
    segs.push_back({{"components", comps}});
  }
  return {{"dimension", path.dimension()}, {"segments", segs}};
}

inline PiecewisePolyPath path_from_json(const json& j) {
  return detail::guarded([&] {
    const std::size_t d = detail::positive_size(j, "dimension");
    std::vector<PathSegment> segs;
    for (const json& s : detail::array_field(j, "segments")) {
      std::vector<Poly> comps;
      for (const json& c : detail::array_field(s, "components")) {
        comps.push_back(poly_from_json(c));
      }
      if (comps.size() != d) {
        throw ParseError("segment has " + std::to_string(comps.size()) +
                         " components, path dimension is " + std::to_string(d));
      }
      segs.emplace_back(std::move(comps));
    }
    return PiecewisePolyPath(std::move(segs));
  });
}

inline json to_json(const TruncatedSignature& sig) {
  return {{"dimension", sig.dimension()},
          {"level", sig.level()},
          {"terms", terms_to_json(sig.data())}};
}

inline TruncatedSignature signature_from_json(const json& j) {
  return detail::guarded([&] {
    const std::size_t d = detail::positive_size(j, "dimension");
    const json& level = detail::field(j, "level");
    if (!level.is_number_unsigned()) {
      throw ParseError("\"level\" must be a nonnegative integer");
    }
    return TruncatedSignature(level.get<std::size_t>(),
                              terms_from_json(detail::field(j, "terms"), d));
  });
}

// --- LetterMap --------------------------------------------------------------

inline json to_json(const LetterMap& b) {
  json images = json::array();
  for (const TensorElem& t : b.images()) images.push_back(to_json(t));
  return {{"source_dim", b.source_dim()},
          {"target_dim", b.target_dim()},
          {"images", images}};
}

inline LetterMap letter_map_from_json(const json& j) {
  return detail::guarded([&] {
    const std::size_t m = detail::positive_size(j, "source_dim");
    const std::size_t d = detail::positive_size(j, "target_dim");
    std::vector<TensorElem> images;
    for (const json& t : detail::array_field(j, "images")) {
      images.push_back(tensor_from_json(t));
    }
    if (images.size() != m) {
      throw ParseError("source_dim is " + std::to_string(m) + " but " +
                       std::to_string(images.size()) + " images given");
    }
    return LetterMap(d, std::move(images));
  });
}

// --- LevelMatrix -------------------------------------------------------------

inline json to_json(const LevelMatrix& lm) {
  json rows = json::array();
  for (const auto& row : lm.rows) {
    json r = json::array();
    for (const Rational& c : row) r.push_back(format_rational(c));
    rows.push_back(r);
  }
  json row_words = json::array();
  for (const Word& w : lm.row_words) row_words.push_back(format_word(w, lm.source_dim));
  json col_words = json::array();
  for (const Word& w : lm.col_words) col_words.push_back(format_word(w, lm.target_dim));
  return {{"row_words", row_words}, {"col_words", col_words}, {"rows", rows}};
}

// Header line "word,<col words...>", then one line per row word.
inline std::string to_csv(const LevelMatrix& lm) {
  std::ostringstream out;
  // Multi-letter words over large alphabets contain commas.
  auto cell = [](const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
  };
  out << "word";
  for (const Word& w : lm.col_words) out << ',' << cell(format_word(w, lm.target_dim));
  out << '\n';
  for (std::size_t r = 0; r < lm.rows.size(); ++r) {
    out << cell(format_word(lm.row_words[r], lm.source_dim));
    for (const Rational& c : lm.rows[r]) out << ',' << format_rational(c);
    out << '\n';
  }
  return out.str();
}

// --- Text forms ---------------------------------------------------------------

// "2*11 + 6*222 - 1/2*12"; coefficients of magnitude 1 are omitted and the
// zero element prints as "0".
inline std::string format_tensor(const TensorElem& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : t.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += format_rational(mag) + "*";
    out += format_word(w, t.dim());
    first = false;
  }
  return out;
}

// Inverse of format_tensor. Also accepts the typographic minus sign (U+2212)
// and middle dot (U+00B7) in place of '-' and '*'. A bare token is always a
// word; coefficients must be joined to their word by '*'.
inline TensorElem parse_tensor(std::string_view text, std::size_t dim) {
  std::string s;
  auto is_operator = [](char ch) { return ch == '+' || ch == '-' || ch == '*'; };
  bool gap = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      ch = '-';
      i += 2;
    } else if (text.substr(i, 2) == "\xC2\xB7") {
      ch = '*';
      i += 1;
    } else if (ch == ' ' || ch == '\t') {
      gap = true;
      continue;
    }
    if (gap && !s.empty() && !is_operator(s.back()) && !is_operator(ch)) {
      throw ParseError("missing operator between terms in '" + std::string(text) + "'");
    }
    gap = false;
    s += ch;
  }
  if (s.empty()) throw ParseError("empty tensor expression");
  TensorElem out(dim);
  if (s == "0") return out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::size_t next = s.find_first_of("+-", pos);
    if (next == std::string::npos) next = s.size();
    std::string term = s.substr(pos, next - pos);
    if (term.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
    Rational coeff(1);
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      term = term.substr(star + 1);
    }
    out.add_term(parse_word(term, dim), sign * coeff);
    pos = next;
    first = false;
  }
  return out;
}

// "x1^2 - 2*x1*x2 + x2^2"; the zero polynomial prints as "0".
inline std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

inline std::string format_map(const PolynomialMap& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.codomain_dim(); ++i) {
    if (i > 0) out += ", ";
    out += format_poly(p[i]);
  }
  return out + ")";
}

// Aligned two-column table, one "word → coeff" line per nonzero term.
inline std::string format_signature_table(const TruncatedSignature& sig) {
  std::size_t width = 1;
  for (const auto& [w, c] : sig.data().terms()) {
    width = std::max(width, format_word(w, sig.dimension()).size());
  }
  std::ostringstream out;
  for (const auto& [w, c] : sig.data().terms()) {
    std::string word = format_word(w, sig.dimension());
    word.resize(width, ' ');
    out << word << " \xE2\x86\x92 " << format_rational(c) << '\n';
  }
  return out.str();
}

// "r1,r2,..." -> rationals.
inline std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.push_back(parse_rational(tok));
    pos = comma + 1;
  }
  return out;
}

}  // namespace sigpoly

#endif  // SIGPOLY_IO_HPP_
