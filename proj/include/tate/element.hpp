#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tate/exponent.hpp"

namespace tate {

/// Grading by a torsion-free abelian group presented as integer vectors:
/// one weight vector per variable, weight of a monomial is the
/// exponent-weighted sum.
struct Grading {
  // weights[var][coordinate]
  std::vector<std::vector<Int>> weights;

  static Grading canonical(const VarTable& t) {
    Grading g;
    g.weights.assign(t.size(), std::vector<Int>(t.size(), 0));
    for (std::size_t i = 0; i < t.size(); ++i) g.weights[i][i] = 1;
    return g;
  }

  std::vector<Rat> weight_of(const ExponentVector& e) const {
    std::size_t dims = weights.empty() ? 0 : weights[0].size();
    std::vector<Rat> w(dims, Rat(0));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t d = 0; d < dims; ++d) w[d] += e[i] * Rat(weights[i][d]);
    return w;
  }
};

/// Finite formal sum coefficient * monomial, in canonical form: like
/// monomials merged, exact zeros dropped.  Immutable in spirit; all
/// operations return fresh values.
class RingElement {
 public:
  using Terms = std::map<ExponentVector, Rat>;

  explicit RingElement(VarTablePtr table) : table_(std::move(table)) {}

  static RingElement zero(VarTablePtr table) { return RingElement(std::move(table)); }
  static RingElement one(VarTablePtr table) {
    RingElement r(table);
    r.terms_.emplace(ExponentVector(std::move(table)), Rat(1));
    return r;
  }
  static RingElement monomial(const ExponentVector& e, const Rat& c) {
    RingElement r(e.table());
    if (c != 0) r.terms_.emplace(e, c);
    return r;
  }

  const VarTablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  RingElement operator+(const RingElement& o) const {
    require_same_table(table_, o.table_);
    RingElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  RingElement operator-() const {
    RingElement r(table_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  RingElement operator-(const RingElement& o) const { return *this + (-o); }

  RingElement operator*(const RingElement& o) const {
    require_same_table(table_, o.table_);
    RingElement r(table_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        auto e = e1 + e2;  // nullopt: nilpotent cap reached, term vanishes
        if (e) r.add_term(*e, c1 * c2);
      }
    return r;
  }

  RingElement scaled(const Rat& c) const {
    RingElement r(table_);
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
  }

  RingElement pow(unsigned long n) const {
    RingElement acc = one(table_);
    for (unsigned long i = 0; i < n; ++i) acc = acc * *this;
    return acc;
  }

  /// Split into homogeneous components, sorted by weight lexicographically.
  /// Components sum back to *this exactly.
  std::vector<std::pair<std::vector<Rat>, RingElement>> homogeneous_components(
      const Grading& g) const {
    std::map<std::vector<Rat>, RingElement> parts;
    for (const auto& [e, c] : terms_) {
      auto w = g.weight_of(e);
      auto it = parts.find(w);
      if (it == parts.end()) it = parts.emplace(w, RingElement(table_)).first;
      it->second.add_term(e, c);
    }
    std::vector<std::pair<std::vector<Rat>, RingElement>> out;
    for (auto& [w, part] : parts) out.emplace_back(w, std::move(part));
    return out;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RingElement& a, const RingElement& b) {
    return !(a == b);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (e.is_zero())
        s += c.str();
      else if (c == 1)
        s += e.str();
      else
        s += c.str() + " " + e.str();
    }
    return s;
  }

 private:
  void add_term(const ExponentVector& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  VarTablePtr table_;
  Terms terms_;
};

}  // namespace tate
