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


// sigpoly: signatures of piecewise-polynomial paths and their images under
// polynomial maps, from the command line.
//
//   sigpoly sig PATH.json --level N
//   sigpoly mp MAP.json WORD [--start x0]
//   sigpoly transform MAP.json SIG.json --level N [--start x0]
//   sigpoly matrix MAP.json K
//   sigpoly zinbiel B.json INPUT [--path PATH.json] [--level N]
//   sigpoly verify [MAP.json PATH.json] --level N | --seed S --trials T
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 I/O failure, 4 insufficient signature truncation level.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigpoly/random.hpp"
#include "sigpoly/sigpoly.hpp"

namespace {

using namespace sigpoly;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;
constexpr int kExitShortfall = 4;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& name) {
  std::ifstream in(name, std::ios::binary);
  if (!in) throw IoError("cannot open " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + name);
  return buf.str();
}

json read_json(const std::string& name) { return parse_json(read_file(name)); }

std::size_t max_level() {
  const char* env = std::getenv("SIGPOLY_MAX_LEVEL");
  if (env == nullptr || *env == '\0') return 12;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw ParseError("SIGPOLY_MAX_LEVEL must be a nonnegative integer");
  return v;
}

void check_level(std::size_t n, const char* what = "level") {
  const std::size_t cap = max_level();
  if (n > cap) {
    throw DomainError(std::string(what) + " " + std::to_string(n) +
                      " exceeds SIGPOLY_MAX_LEVEL=" + std::to_string(cap));
  }
}

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Rational> resolve_start(const std::string& start, std::size_t dim,
                                    const std::optional<PiecewisePolyPath>& path) {
  if (!start.empty()) {
    auto x0 = parse_point(start);
    if (x0.size() != dim) {
      throw DimensionMismatch("--start has " + std::to_string(x0.size()) +
                              " coordinates, map domain is " + std::to_string(dim));
    }
    return x0;
  }
  if (path) return path->start_point();
  return std::vector<Rational>(dim);
}

std::string format_point(const std::vector<Rational>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ",";
    out += format_rational(x[i]);
  }
  return out;
}

void echo_shift(const PolynomialMap& p, const std::vector<Rational>& x0,
                const PolynomialMap& shifted) {
  std::cerr << "start x0 = (" << format_point(x0) << ")\n"
            << "p  = " << format_map(p) << '\n'
            << "p~ = " << format_map(shifted) << '\n';
}

// --- sig -------------------------------------------------------------------

int cmd_sig(const Options& opt, const std::string& path_file, std::size_t level) {
  check_level(level);
  const auto path = path_from_json(read_json(path_file));
  const auto sig = path_signature(path, level);
  if (opt.json()) {
    emit(to_json(sig));
  } else {
    std::cout << format_signature_table(sig);
  }
  return 0;
}

// --- mp ----------------------------------------------------------------------

int cmd_mp(const Options& opt, const std::string& map_file, const std::string& word,
           const std::string& start) {
  const auto p = map_from_json(read_json(map_file));
  const auto x0 = resolve_start(start, p.domain_dim(), std::nullopt);
  const auto shifted = shift_map(p, x0);
  echo_shift(p, x0, shifted);
  const Word w = parse_word(word, p.codomain_dim());
  check_level(w.size(), "word length");
  MpMap mp(shifted);
  const TensorElem& image = mp(w);
  if (opt.json()) {
    emit(to_json(image));
  } else {
    std::cout << format_tensor(image) << '\n';
  }
  return 0;
}

// --- transform -------------------------------------------------------------

int cmd_transform(const Options& opt, const std::string& map_file,
                  const std::string& sig_file, std::size_t level,
                  const std::string& start) {
  check_level(level);
  const auto p = map_from_json(read_json(map_file));
  const auto sig = signature_from_json(read_json(sig_file));
  const auto x0 = resolve_start(start, p.domain_dim(), std::nullopt);
  const auto shifted = shift_map(p, x0);
  echo_shift(p, x0, shifted);
  std::cerr << "required input level deg(p~)*N = " << shifted.degree() << "*"
            << level << " = " << required_input_level(shifted, level) << '\n';
  const auto out = transform(p, sig, level, x0);
  if (opt.json()) {
    emit(to_json(out));
  } else {
    std::cout << format_signature_table(out);
  }
  return 0;
}

// --- matrix ------------------------------------------------------------------

int cmd_matrix(const Options& opt, const std::string& map_file, std::size_t k) {
  check_level(k);
  const auto p = map_from_json(read_json(map_file));
  const auto lm = level_matrix(p, k);
  if (opt.json()) {
    emit(to_json(lm));
  } else {
    std::cout << to_csv(lm);
  }
  return 0;
}

// --- zinbiel -----------------------------------------------------------------

int cmd_zinbiel(const Options& opt, const std::string& b_file, const std::string& input,
                const std::string& path_file, std::optional<std::size_t> level) {
  const auto b = letter_map_from_json(read_json(b_file));
  const TensorElem w = parse_tensor(input, b.source_dim());
  check_level(w.max_level(), "input length");
  LambdaMap lambda(b);
  const TensorElem image = lambda(w);
  json doc{{"input", to_json(w)}, {"lambda", to_json(image)}};
  if (!opt.json()) std::cout << "Lambda_B(" << format_tensor(w) << ") = " << format_tensor(image) << '\n';
  if (path_file.empty()) {
    if (opt.json()) emit(doc);
    return 0;
  }
  const auto x = path_from_json(read_json(path_file));
  const std::size_t n = level.value_or(image.max_level());
  check_level(n);
  const auto r = signature_defined_path_transport(b, x, w, n);
  doc["transport"] = {{"level", n},
                      {"via_lambda", format_rational(r.via_lambda)},
                      {"direct", format_rational(r.direct)},
                      {"agree", r.via_lambda == r.direct}};
  if (opt.json()) {
    emit(doc);
  } else {
    std::cout << "<sigma(X), Lambda_B(w)> = " << format_rational(r.via_lambda) << '\n'
              << "<sigma(Y), w>           = " << format_rational(r.direct) << '\n';
  }
  if (r.via_lambda != r.direct) {
    std::cerr << "transport mismatch\n";
    return kExitMismatch;
  }
  return 0;
}

// --- verify ------------------------------------------------------------------

struct Comparison {
  std::size_t words = 0;
  std::vector<std::string> differences;
};

// transform(p, sigma(X)) against sigma(p(X)) integrated directly.
Comparison compare(const PolynomialMap& p, const PiecewisePolyPath& x, std::size_t level) {
  const auto x0 = x.start_point();
  const std::size_t needed = required_input_level(shift_map(p, x0), level);
  const auto via_mp = transform(p, path_signature(x, needed), level, x0);
  const auto oracle = path_signature(image_path(p, x), level);
  Comparison out;
  for (const Word& w : words_up_to(p.codomain_dim(), level)) {
    ++out.words;
    const Rational a = via_mp.coeff(w);
    const Rational b = oracle.coeff(w);
    if (a != b) {
      out.differences.push_back(format_word(w, p.codomain_dim()) + ": transform " +
                                format_rational(a) + ", direct " + format_rational(b));
    }
  }
  return out;
}

int report(const Options& opt, std::size_t instances, std::size_t words,
           const std::vector<std::string>& differences) {
  if (opt.json()) {
    emit({{"instances", instances},
          {"words_compared", words},
          {"equal", differences.empty()},
          {"differences", differences}});
  } else {
    for (const auto& d : differences) std::cout << "differs at " << d << '\n';
    std::cout << (differences.empty() ? "OK" : "MISMATCH") << ": " << instances
              << " instance(s), " << words << " coefficient(s) compared\n";
  }
  return differences.empty() ? 0 : kExitMismatch;
}

int cmd_verify(const Options& opt, const std::string& map_file, const std::string& path_file,
               std::optional<std::size_t> level, std::optional<std::uint64_t> seed,
               std::size_t trials) {
  if (seed) {
    RandomSource rng(*seed);
    std::size_t words = 0;
    std::vector<std::string> differences;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t d = rng.uniform(1, 3);
      const std::size_t m = rng.uniform(1, 3);
      const std::size_t n = level.value_or(rng.uniform(0, 3));
      check_level(n);
      const auto p = rng.map(d, m, rng.uniform(1, 3), rng.chance(50));
      const auto x = rng.path(d, rng.uniform(1, 2), rng.uniform(1, 3));
      const Comparison c = compare(p, x, n);
      words += c.words;
      for (const auto& diff : c.differences) {
        differences.push_back("trial " + std::to_string(t) + ", word " + diff);
      }
    }
    return report(opt, trials, words, differences);
  }
  if (map_file.empty() || path_file.empty() || !level) {
    throw ParseError("verify needs MAP PATH --level N, or --seed S");
  }
  check_level(*level);
  const auto p = map_from_json(read_json(map_file));
  const auto x = path_from_json(read_json(path_file));
  const auto x0 = x.start_point();
  echo_shift(p, x0, shift_map(p, x0));
  const Comparison c = compare(p, x, *level);
  return report(opt, 1, c.words, c.differences);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact signatures of polynomial paths and their polynomial images"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string map_file, path_file, sig_file, b_file, word, input, start;
  std::size_t level = 0;
  std::size_t k = 0;
  std::optional<std::size_t> opt_level;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100;

  auto* sig = app.add_subcommand("sig", "Truncated signature of a path");
  sig->add_option("path", path_file, "Path JSON file")->required();
  sig->add_option("--level,-N", level, "Truncation level")->required();

  auto* mp = app.add_subcommand("mp", "Apply M_p~ to a word");
  mp->add_option("map", map_file, "Polynomial map JSON file")->required();
  mp->add_option("word", word, "Word over the codomain alphabet ('e' for empty)")->required();
  mp->add_option("--start", start, "Base point x0 as r1,r2,... (default: origin)");

  auto* tr = app.add_subcommand("transform", "Signature of p(X) from the signature of X");
  tr->add_option("map", map_file, "Polynomial map JSON file")->required();
  tr->add_option("signature", sig_file, "Signature JSON file")->required();
  tr->add_option("--level,-N", level, "Output truncation level")->required();
  tr->add_option("--start", start, "Start point of X as r1,r2,... (default: origin)");

  auto* mx = app.add_subcommand("matrix", "Matrix of M_p on words of length k");
  mx->add_option("map", map_file, "Homogeneous polynomial map JSON file")->required();
  mx->add_option("k", k, "Word length")->required();

  auto* zb = app.add_subcommand("zinbiel", "Half-shuffle extension of a letter map");
  zb->add_option("letter_map", b_file, "Letter map JSON file")->required();
  zb->add_option("input", input, "Tensor over the source alphabet, e.g. '12 - 21'")->required();
  zb->add_option("--path", path_file, "Path JSON file; also transport along it");
  zb->add_option("--level,-N", opt_level, "Truncation level of sigma(X) (default: as needed)");

  auto* vf = app.add_subcommand("verify", "Compare transform with direct integration of p(X)");
  vf->add_option("map", map_file, "Polynomial map JSON file");
  vf->add_option("path", path_file, "Path JSON file");
  vf->add_option("--level,-N", opt_level, "Truncation level");
  vf->add_option("--seed", seed, "Run on random instances from this seed");
  vf->add_option("--trials", trials, "Number of random instances")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*sig) return cmd_sig(opt, path_file, level);
    if (*mp) return cmd_mp(opt, map_file, word, start);
    if (*tr) return cmd_transform(opt, map_file, sig_file, level, start);
    if (*mx) return cmd_matrix(opt, map_file, k);
    if (*zb) return cmd_zinbiel(opt, b_file, input, path_file, opt_level);
    if (*vf) return cmd_verify(opt, map_file, path_file, opt_level, seed, trials);
  } catch (const TruncationShortfall& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitShortfall;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
