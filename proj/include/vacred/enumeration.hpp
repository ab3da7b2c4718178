#pragma once

// Corpus generation: exhaustive enumeration of all labelled digraphs at small
// sizes (one framework per attack-relation bitmask, ascending), canonical
// forms for isomorphism reduction, and seeded random frameworks.
//
// Randomness comes from the splitmix64 generator so every platform and every
// implementation reproduces identical corpora from identical seeds:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ z>>30) * 0xbf58476d1ce4e5b9
//   z = (z ^ z>>27) * 0x94d049bb133111eb; output z ^ z>>31
// random_af draws one value per ordered argument pair in row-major order;
// corpus member k of a random corpus uses starting state seed + k.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "vacred/af.hpp"

namespace vacred {

inline constexpr int kMaxExhaustiveArgs = 5;
inline constexpr int kMaxCanonicalArgs = 8;

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Number of labelled frameworks on n arguments: 2^(n^2).
inline std::uint64_t exhaustive_count(int n) {
  if (n < 0 || n > kMaxExhaustiveArgs)
    throw CapacityError("exhaustive enumeration supports at most " +
                        std::to_string(kMaxExhaustiveArgs) + " arguments");
  return std::uint64_t{1} << (n * n);
}

/// Framework number `mask` of the exhaustive enumeration on n arguments:
/// attack (i,j) is present iff bit i*n+j of the mask is set.
inline ArgumentationFramework af_from_mask(int n, std::uint64_t mask) {
  if (mask >= exhaustive_count(n))
    throw Error("attack mask out of range for the given argument count");
  ArgumentationFramework af(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1) af.add_attack(i, j);
  return af;
}

template <typename Visit>
void for_each_af(int n, Visit visit) {
  const std::uint64_t count = exhaustive_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (!visit(af_from_mask(n, mask))) return;
}

/// Lexicographically minimal adjacency bit-string over all argument
/// permutations, reading positions (0,0),(0,1),...,(n-1,n-1). Equal exactly
/// for isomorphic frameworks. Empty string for the empty framework.
inline std::string canonical_form(const ArgumentationFramework& af) {
  const int n = af.arg_count();
  if (n > kMaxCanonicalArgs)
    throw CapacityError("canonical form supports at most " +
                        std::to_string(kMaxCanonicalArgs) + " arguments");
  const int bits = n * n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // perm[old] = new position; bit 0 of the key is the most significant so
  // numeric comparison matches lexicographic comparison of the bit-string.
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (af.has_attack(i, j))
          key |= std::uint64_t{1} << (bits - 1 - (perm[i] * n + perm[j]));
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string text(static_cast<std::size_t>(bits), '0');
  for (int p = 0; p < bits; ++p)
    if ((best >> (bits - 1 - p)) & 1) text[static_cast<std::size_t>(p)] = '1';
  return text;
}

namespace detail {

// Bernoulli draw with exact rational threshold num/den over a uniform
// 64-bit value: accept iff u/2^64 < num/den.
inline bool rational_draw(std::uint64_t u, std::uint64_t num,
                          std::uint64_t den) {
  return static_cast<unsigned __int128>(u) * den <
         static_cast<unsigned __int128>(num) << 64;
}

}  // namespace detail

/// Random framework: each ordered pair (i,j), i != j, is an attack with
/// probability edge_num/edge_den, each loop (i,i) with loop_num/loop_den.
/// Identical arguments give identical frameworks on every platform.
inline ArgumentationFramework random_af(int n, std::uint64_t edge_num,
                                        std::uint64_t edge_den,
                                        std::uint64_t loop_num,
                                        std::uint64_t loop_den,
                                        std::uint64_t seed) {
  if (edge_den == 0 || loop_den == 0 || edge_num > edge_den ||
      loop_num > loop_den)
    throw Error("attack probabilities must be rationals in [0,1]");
  ArgumentationFramework af(n);
  std::uint64_t state = seed;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::uint64_t u = splitmix64_next(state);
      const bool loop = i == j;
      if (detail::rational_draw(u, loop ? loop_num : edge_num,
                                loop ? loop_den : edge_den))
        af.add_attack(i, j);
    }
  return af;
}

/// One corpus layer: either every framework on n arguments or a seeded
/// random sample. `iso_reduce` keeps only the first representative of each
/// isomorphism class.
struct CorpusSpec {
  enum class Mode { Exhaustive, Random };

  Mode mode = Mode::Exhaustive;
  int n = 0;
  std::uint64_t edge_num = 1, edge_den = 4;
  std::uint64_t loop_num = 1, loop_den = 8;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  bool iso_reduce = false;

  static CorpusSpec exhaustive(int n, bool iso_reduce = false) {
    CorpusSpec spec;
    spec.mode = Mode::Exhaustive;
    spec.n = n;
    spec.iso_reduce = iso_reduce;
    spec.validate();
    return spec;
  }

  static CorpusSpec random(int n, std::uint64_t edge_num,
                           std::uint64_t edge_den, std::uint64_t loop_num,
                           std::uint64_t loop_den, std::uint64_t count,
                           std::uint64_t seed, bool iso_reduce = false) {
    CorpusSpec spec;
    spec.mode = Mode::Random;
    spec.n = n;
    spec.edge_num = edge_num;
    spec.edge_den = edge_den;
    spec.loop_num = loop_num;
    spec.loop_den = loop_den;
    spec.count = count;
    spec.seed = seed;
    spec.iso_reduce = iso_reduce;
    spec.validate();
    return spec;
  }

  void validate() const {
    if (mode == Mode::Exhaustive) {
      if (n < 0 || n > kMaxExhaustiveArgs)
        throw CapacityError("exhaustive corpora support at most " +
                            std::to_string(kMaxExhaustiveArgs) + " arguments");
    } else {
      if (n < 0 || n > kMaxArguments)
        throw CapacityError("random corpora support at most 64 arguments");
      if (edge_den == 0 || loop_den == 0 || edge_num > edge_den ||
          loop_num > loop_den)
        throw Error("attack probabilities must be rationals in [0,1]");
    }
    if (iso_reduce && n > kMaxCanonicalArgs)
      throw CapacityError("isomorphism reduction supports at most " +
                          std::to_string(kMaxCanonicalArgs) + " arguments");
  }

  std::uint64_t raw_size() const {
    return mode == Mode::Exhaustive ? exhaustive_count(n) : count;
  }

  ArgumentationFramework raw_at(std::uint64_t index) const {
    return mode == Mode::Exhaustive
               ? af_from_mask(n, index)
               : random_af(n, edge_num, edge_den, loop_num, loop_den,
                           seed + index);
  }

  /// Grammar: `exhaustive:<n>` or
  /// `random:n=<n>,p=<num>/<den>,loops=<num>/<den>,count=<k>,seed=<s>`.
  static CorpusSpec parse(std::string_view text);

  std::string to_string() const {
    if (mode == Mode::Exhaustive)
      return "exhaustive:" + std::to_string(n) + (iso_reduce ? "+iso" : "");
    return "random:n=" + std::to_string(n) + ",p=" + std::to_string(edge_num) +
           "/" + std::to_string(edge_den) + ",loops=" +
           std::to_string(loop_num) + "/" + std::to_string(loop_den) +
           ",count=" + std::to_string(count) + ",seed=" +
           std::to_string(seed) + (iso_reduce ? "+iso" : "");
  }
};

namespace detail {

inline std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  if (text.empty()) throw Error("missing number in corpus spec");
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw Error("invalid " + std::string(what) + " in corpus spec: '" +
                  std::string(text) + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

inline std::pair<std::uint64_t, std::uint64_t> parse_rational(
    std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    return {parse_u64(text, "probability"), 1};
  return {parse_u64(text.substr(0, slash), "probability numerator"),
          parse_u64(text.substr(slash + 1), "probability denominator")};
}

}  // namespace detail

inline CorpusSpec CorpusSpec::parse(std::string_view text) {
  if (text.starts_with("exhaustive:")) {
    const std::uint64_t n =
        detail::parse_u64(text.substr(11), "argument count");
    return CorpusSpec::exhaustive(static_cast<int>(n));
  }
  if (text.starts_with("random:")) {
    CorpusSpec spec;
    spec.mode = Mode::Random;
    std::string_view rest = text.substr(7);
    bool have_n = false, have_count = false;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos)
        throw Error("expected key=value in corpus spec, got '" +
                    std::string(item) + "'");
      const std::string_view key = item.substr(0, eq);
      const std::string_view value = item.substr(eq + 1);
      if (key == "n") {
        spec.n = static_cast<int>(detail::parse_u64(value, "argument count"));
        have_n = true;
      } else if (key == "p") {
        std::tie(spec.edge_num, spec.edge_den) = detail::parse_rational(value);
      } else if (key == "loops") {
        std::tie(spec.loop_num, spec.loop_den) = detail::parse_rational(value);
      } else if (key == "count") {
        spec.count = detail::parse_u64(value, "count");
        have_count = true;
      } else if (key == "seed") {
        spec.seed = detail::parse_u64(value, "seed");
      } else {
        throw Error("unknown corpus spec key '" + std::string(key) + "'");
      }
    }
    if (!have_n || !have_count)
      throw Error("random corpus spec needs at least n=... and count=...");
    spec.validate();
    return spec;
  }
  throw Error("corpus spec must start with 'exhaustive:' or 'random:', got '" +
              std::string(text) + "'");
}

/// Concatenation of corpus layers with a single global index, so sweeps can
/// be partitioned across workers and merged deterministically by index.
/// Layers are either generated from a CorpusSpec or explicit framework lists
/// (e.g. loaded from a file).
class Corpus {
 public:
  Corpus() = default;

  explicit Corpus(std::vector<CorpusSpec> specs) {
    for (CorpusSpec& spec : specs) add_layer(std::move(spec));
  }

  static Corpus single(CorpusSpec spec) { return Corpus({std::move(spec)}); }

  /// Exhaustive layers for every argument count in [lo, hi].
  static Corpus exhaustive_range(int lo, int hi) {
    std::vector<CorpusSpec> specs;
    for (int n = lo; n <= hi; ++n) specs.push_back(CorpusSpec::exhaustive(n));
    return Corpus(std::move(specs));
  }

  void add_layer(CorpusSpec spec) {
    spec.validate();
    Block block;
    block.offset = size_;
    block.spec = spec;
    block.description = spec.to_string();
    if (spec.iso_reduce) {
      std::unordered_set<std::string> seen;
      for (std::uint64_t i = 0; i < spec.raw_size(); ++i)
        if (seen.insert(canonical_form(spec.raw_at(i))).second)
          block.kept.push_back(i);
      block.size = block.kept.size();
      block.reduced = true;
    } else {
      block.size = spec.raw_size();
    }
    size_ += block.size;
    blocks_.push_back(std::move(block));
  }

  void add_layer(std::vector<ArgumentationFramework> afs,
                 std::string description) {
    Block block;
    block.offset = size_;
    block.afs = std::move(afs);
    block.size = block.afs.size();
    block.description = std::move(description);
    size_ += block.size;
    blocks_.push_back(std::move(block));
  }

  std::uint64_t size() const { return size_; }

  ArgumentationFramework at(std::uint64_t index) const {
    for (const Block& block : blocks_)
      if (index < block.offset + block.size) {
        const std::uint64_t local = index - block.offset;
        if (!block.afs.empty() || !block.spec)
          return block.afs[static_cast<std::size_t>(local)];
        return block.spec->raw_at(block.reduced ? block.kept[local] : local);
      }
    throw Error("corpus index out of range");
  }

  std::string describe() const {
    std::string text;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i > 0) text += "+";
      text += blocks_[i].description;
    }
    return text;
  }

 private:
  struct Block {
    std::uint64_t offset = 0;
    std::uint64_t size = 0;
    std::optional<CorpusSpec> spec;
    bool reduced = false;
    std::vector<std::uint64_t> kept;  // raw indices, present only under iso
    std::vector<ArgumentationFramework> afs;
    std::string description;
  };

  std::vector<Block> blocks_;
  std::uint64_t size_ = 0;
};

}  // namespace vacred
