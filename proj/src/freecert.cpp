#include "freealg/freecert.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace freealg {

namespace {

void extend_words(int m, int L, bool with_inverses, std::vector<Word>& level, std::vector<Word>& out) {
  for (int len = 1; len <= L; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      if (with_inverses) {
        // letters in the order g1, g1^-1, g2, g2^-1, ...
        for (int g = 1; g <= m; ++g) {
          for (int l : {g, -g}) {
            if (!w.letters.empty() && w.letters.back() == -l) continue;
            Word n = w;
            n.letters.push_back(l);
            next.push_back(std::move(n));
          }
        }
      } else {
        for (int g = 0; g < m; ++g) {
          Word n = w;
          n.letters.push_back(g);
          next.push_back(std::move(n));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
}

Integer lcm_of_dens(const QVec& v) {
  Integer l = 1;
  for (const auto& [k, c] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a * b, Poly::gcd(a, b), q, r);
  return q.monic();
}

}  // namespace

std::vector<Word> enumerate_words(int m, int L, bool with_inverses) {
  std::vector<Word> out{Word{}};
  if (m < 1 || L < 1) return out;
  std::vector<Word> level{Word{}};
  extend_words(m, L, with_inverses, level, out);
  return out;
}

std::string word_str(const Word& w, const std::vector<std::string>& names, bool signed_letters) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (int l : w.letters) {
    if (!signed_letters) {
      out += names.at(static_cast<std::size_t>(l));
      continue;
    }
    out += names.at(static_cast<std::size_t>(std::abs(l) - 1));
    if (l < 0) out += "^-1";
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "certified";
    case Verdict::RelationFound:
      return "relation_found";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

RankResult rank_over_Q(const std::vector<QVec>& vectors) {
  const std::size_t n = vectors.size();
  std::set<CoordKey> keyset;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v)
      if (c != 0) keyset.insert(k);
  const std::vector<CoordKey> keys(keyset.begin(), keyset.end());
  std::map<CoordKey, std::size_t> col;
  for (std::size_t j = 0; j < keys.size(); ++j) col.emplace(keys[j], j);
  const std::size_t c = keys.size();
  const std::size_t width = c + n;

  std::vector<Integer> scale(n);
  std::vector<std::vector<Integer>> M(n, std::vector<Integer>(width, 0));
  for (std::size_t i = 0; i < n; ++i) {
    scale[i] = lcm_of_dens(vectors[i]);
    for (const auto& [k, q] : vectors[i]) {
      if (q == 0) continue;
      M[i][col.at(k)] = q.get_num() * (scale[i] / q.get_den());
    }
    M[i][c + i] = 1;
  }

  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t j = 0; j < c && row < n; ++j) {
    std::size_t p = row;
    while (p < n && M[p][j] == 0) ++p;
    if (p == n) continue;
    std::swap(M[p], M[row]);
    const Integer pivot = M[row][j];
    for (std::size_t i = row + 1; i < n; ++i) {
      const Integer f = M[i][j];
      for (std::size_t k = 0; k < width; ++k) {
        if (k < j) continue;
        Integer v = pivot * M[i][k] - f * M[row][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][k] = std::move(v);
      }
    }
    prev = pivot;
    ++row;
  }

  RankResult res;
  res.rank = static_cast<int>(row);
  if (row < n) {
    std::vector<Rational> rel(n);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      rel[i] = Rational(M[row][c + i] * scale[i]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rel[i].get_num_mpz_t());
    }
    const auto first = std::find_if(rel.begin(), rel.end(), [](const Rational& q) { return q != 0; });
    if (first != rel.end() && *first < 0) g = -g;
    for (auto& q : rel) q /= g;
    res.relation = std::move(rel);
  }
  return res;
}

bool relation_vanishes(const std::vector<QVec>& coords, const std::vector<Rational>& relation) {
  QVec sum;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (const auto& [k, q] : coords[i]) sum[k] += relation[i] * q;
  return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<QVec> coordinatize_group_ring(const std::vector<GrpRingElem>& elems) {
  std::vector<QVec> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    QVec v;
    for (const auto& [w, c] : e.terms()) v.emplace(CoordKey(w.letters().begin(), w.letters().end()), c);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<QVec> coordinatize_jets(const std::vector<Jet<RatFun>>& elems, int points, std::uint64_t seed) {
  int prec = kExactPrec;
  for (const auto& e : elems) prec = std::min(prec, e.prec());
  RationalSampler rng(seed);
  std::vector<Rational> pts;
  auto is_pole = [&](const Rational& x) {
    for (const auto& e : elems)
      for (const auto& f : e.coeffs())
        if (f.den().eval(x) == 0) return true;
    return false;
  };
  while (static_cast<int>(pts.size()) < points) {
    Rational x = rng.next(97, 23);
    if (is_pole(x) || std::find(pts.begin(), pts.end(), x) != pts.end()) continue;
    pts.push_back(std::move(x));
  }
  std::vector<QVec> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    QVec v;
    for (int i = e.min_ord(); i < prec && i <= e.max_ord(); ++i) {
      const RatFun f = e.coeff(i);
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        Rational y = f.eval(pts[k]);
        if (y != 0) v.emplace(CoordKey{i, static_cast<long>(k)}, std::move(y));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<QVec> coordinatize_skewfracs(const std::vector<SkewFrac>& elems) {
  if (elems.empty()) return {};
  SkewPoly D = elems.front().den();
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (!(elems[i].den() == D)) D = gcrd_llcm(D, elems[i].den()).llcm;
  std::vector<SkewPoly> nums;
  nums.reserve(elems.size());
  int max_deg = 0;
  for (const auto& e : elems) {
    const DivModResult qr = divmod(D, e.den(), Side::Right);
    if (!qr.r.is_zero()) throw Error(ErrorKind::AdapterFailure, "common left denominator is not a left multiple");
    nums.push_back(qr.q * e.num());
    max_deg = std::max(max_deg, nums.back().degree());
  }
  std::vector<QVec> out(elems.size());
  for (int k = 0; k <= max_deg; ++k) {
    Poly common(1);
    for (const auto& n : nums) {
      const RatFun c = n.coeff(k);
      if (!c.is_zero()) common = poly_lcm(common, c.den());
    }
    for (std::size_t i = 0; i < nums.size(); ++i) {
      const RatFun c = nums[i].coeff(k);
      if (c.is_zero()) continue;
      Poly q, r;
      Poly::divmod(common, c.den(), q, r);
      const Poly cleared = c.num() * q;
      for (int d = 0; d <= cleared.degree(); ++d) {
        const Rational a = cleared.coeff(d);
        if (a != 0) out[i].emplace(CoordKey{k, d}, a);
      }
    }
  }
  return out;
}

}  // namespace freealg
