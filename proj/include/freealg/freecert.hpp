#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freealg/groupring.hpp"
#include "freealg/jet.hpp"
#include "freealg/scalar.hpp"
#include "freealg/skewfrac.hpp"

namespace freealg {

/// Letters are generator indices; in group mode g+1 / -(g+1) stand for g and g^{-1}.
struct Word {
  std::vector<int> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

enum class WordMode { Monoid, Group };

/// All words of length <= L in length-lexicographic order; group mode keeps
/// reduced words only.
std::vector<Word> enumerate_words(int m, int L, bool with_inverses);
std::string word_str(const Word& w, const std::vector<std::string>& names, bool signed_letters);

using CoordKey = std::vector<long>;
using QVec = std::map<CoordKey, Rational>;

struct RankResult {
  int rank = 0;
  /// Nonzero c with sum c_i v_i = 0, when rank < number of vectors.
  std::optional<std::vector<Rational>> relation;
};

/// Fraction-free (Bareiss) elimination on the integer-scaled matrix augmented
/// with the identity; a zero row of the reduced matrix yields the relation.
RankResult rank_over_Q(const std::vector<QVec>& vectors);

/// Evaluates every word in a ring. Each word of length l is the product of
/// its length l-1 prefix with one letter, computed level by level; within a
/// level the words are independent, and results are stored by word index.
template <class T>
std::vector<T> evaluate_words(const std::vector<Word>& words, const std::vector<T>& letters_pos,
                              const std::vector<T>& letters_neg, const T& one,
                              const std::function<T(const T&, const T&)>& mul, Exec exec) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k].letters, k);
  std::vector<T> out(words.size(), one);
  std::size_t max_len = 0;
  for (const auto& w : words) max_len = std::max(max_len, w.letters.size());
  auto letter_value = [&](int l) -> const T& {
    if (letters_neg.empty()) return letters_pos[static_cast<std::size_t>(l)];
    return l > 0 ? letters_pos[static_cast<std::size_t>(l - 1)] : letters_neg[static_cast<std::size_t>(-l - 1)];
  };
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> level;
    for (std::size_t k = 0; k < words.size(); ++k)
      if (words[k].letters.size() == len) level.push_back(k);
    const long n = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long q = 0; q < n; ++q) {
      const std::size_t k = level[static_cast<std::size_t>(q)];
      const auto& letters = words[k].letters;
      const std::vector<int> prefix(letters.begin(), letters.end() - 1);
      out[k] = mul(out[index.at(prefix)], letter_value(letters.back()));
    }
  }
  return out;
}

/// Reference evaluation: each word multiplied out from the left on its own.
template <class T>
std::vector<T> evaluate_words_reference(const std::vector<Word>& words, const std::vector<T>& letters_pos,
                                        const std::vector<T>& letters_neg, const T& one,
                                        const std::function<T(const T&, const T&)>& mul) {
  std::vector<T> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    T acc = one;
    for (int l : w.letters) {
      const T& x = letters_neg.empty() ? letters_pos[static_cast<std::size_t>(l)]
                   : l > 0             ? letters_pos[static_cast<std::size_t>(l - 1)]
                                       : letters_neg[static_cast<std::size_t>(-l - 1)];
      acc = mul(acc, x);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

enum class Verdict { Certified, RelationFound, Inconclusive };
const char* to_string(Verdict v);

struct CertReport {
  std::string command;
  std::string claim;
  Verdict verdict = Verdict::Inconclusive;
  int rank = 0;
  int expected = 0;
  int word_count = 0;
  std::vector<std::string> words;
  std::optional<std::vector<Rational>> relation;
  std::optional<int> truncation_order;
  std::string coordinatizer;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
};

/// A ring in which words are evaluated, plus a linear coordinatization.
/// `exact` means the coordinatizer is injective on the ring, so a rank
/// deficiency is a genuine relation.
template <class T>
struct RingAdapter {
  std::string name;
  T one;
  std::function<T(const T&, const T&)> mul;
  std::function<T(const T&)> inverse;  // needed in group mode only
  std::function<std::vector<QVec>(const std::vector<T>&)> coordinatize;
  bool exact = true;
};

/// Evaluates, coordinatizes and ranks. Throws AdapterFailure when a
/// generator cannot be inverted in group mode.
template <class T>
CertReport certify_freeness(const std::vector<T>& generators, const RingAdapter<T>& adapter, int L, WordMode mode,
                            const std::vector<std::string>& names, Exec exec = Exec::Parallel) {
  const auto start = std::chrono::steady_clock::now();
  const bool group = mode == WordMode::Group;
  const int m = static_cast<int>(generators.size());
  const std::vector<Word> words = enumerate_words(m, L, group);
  std::vector<T> inverses;
  if (group) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      try {
        inverses.push_back(adapter.inverse(generators[g]));
      } catch (const Error& e) {
        throw Error(ErrorKind::AdapterFailure, "generator " + names.at(g) + " is not invertible: " + e.what());
      }
    }
  }
  const std::vector<T> values = evaluate_words<T>(words, generators, inverses, adapter.one, adapter.mul, exec);
  const std::vector<QVec> coords = adapter.coordinatize(values);
  const RankResult rr = rank_over_Q(coords);

  CertReport rep;
  rep.coordinatizer = adapter.name;
  rep.rank = rr.rank;
  rep.expected = static_cast<int>(words.size());
  rep.word_count = rep.expected;
  for (const auto& w : words) rep.words.push_back(word_str(w, names, group));
  if (rr.rank == rep.expected) {
    rep.verdict = Verdict::Certified;
  } else if (adapter.exact) {
    rep.verdict = Verdict::RelationFound;
    rep.relation = rr.relation;
  } else {
    rep.verdict = Verdict::Inconclusive;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Coordinatizers.

/// Q[F]: the coefficient of each reduced group word.
std::vector<QVec> coordinatize_group_ring(const std::vector<GrpRingElem>& elems);

/// K((p; sigma)) jets: coefficient of p^i evaluated at seeded rational
/// points, keyed (i, point). Points that are poles of any coefficient of
/// any element are replaced, so the same linear map applies to all.
std::vector<QVec> coordinatize_jets(const std::vector<Jet<RatFun>>& elems, int points, std::uint64_t seed);

/// Exact path for K(p; sigma): common left denominator D with
/// d_i^{-1} n_i = D^{-1} (c_i n_i), then per p-degree a common denominator
/// for the Q(t) coefficients; keys (p-degree, t-degree).
std::vector<QVec> coordinatize_skewfracs(const std::vector<SkewFrac>& elems);

/// Multiplies the relation back through the coordinates; true iff it vanishes.
bool relation_vanishes(const std::vector<QVec>& coords, const std::vector<Rational>& relation);

}  // namespace freealg
