#include "freealg/groupring.hpp"

#include <cstdlib>
#include <sstream>

namespace freealg {

FWord::FWord(std::vector<int> letters) {
  for (int l : letters) {
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FWord FWord::inverse() const {
  FWord r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

FWord operator*(const FWord& a, const FWord& b) {
  std::vector<int> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return FWord(std::move(l));
}

std::string FWord::str(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    out += g < names.size() ? names[g] : "g" + std::to_string(g);
    if (l < 0) out += "^-1";
  }
  return out;
}

GrpRingElem::GrpRingElem(const Rational& c) {
  if (c != 0) terms_.emplace(FWord(), c);
}

GrpRingElem GrpRingElem::word(const FWord& w, const Rational& c) {
  GrpRingElem e;
  e.add_term(w, c);
  return e;
}

void GrpRingElem::add_term(const FWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GrpRingElem GrpRingElem::operator-() const {
  GrpRingElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

GrpRingElem& GrpRingElem::operator+=(const GrpRingElem& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

GrpRingElem operator*(const GrpRingElem& a, const GrpRingElem& b) {
  GrpRingElem r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

std::string GrpRingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << w.str();
  }
  return os.str();
}

GrpRingElem involution(const GrpRingElem& a) {
  GrpRingElem r;
  for (const auto& [w, c] : a.terms()) r += GrpRingElem::word(w.inverse(), c);
  return r;
}

std::vector<GrpRingElem> symmetric_generators() {
  std::vector<GrpRingElem> out;
  for (int g = 0; g < 2; ++g) {
    const FWord w = FWord::generator(g);
    out.push_back(GrpRingElem::word(w) + GrpRingElem::word(w.inverse()));
  }
  return out;
}

}  // namespace freealg
