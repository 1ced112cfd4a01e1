#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tate/rational.hpp"
#include "tate/vars.hpp"

namespace tate {

/// Exponent vector of a monomial over a fixed variable table.  Entries are
/// exact rationals; only p-divisible variables may carry non-integer
/// exponents (with p-power denominators).
class ExponentVector {
 public:
  explicit ExponentVector(VarTablePtr table)
      : table_(std::move(table)), e_(table_->size(), Rat(0)) {}
  ExponentVector(VarTablePtr table, std::vector<Rat> e)
      : table_(std::move(table)), e_(std::move(e)) {
    if (e_.size() != table_->size())
      throw std::invalid_argument("ExponentVector: wrong arity");
  }

  const VarTablePtr& table() const { return table_; }
  std::size_t size() const { return e_.size(); }
  const Rat& operator[](std::size_t i) const { return e_.at(i); }
  Rat& operator[](std::size_t i) { return e_.at(i); }
  const Rat& exp(const std::string& name) const { return e_[table_->index_of(name)]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  /// Whether the entries lie in the declared lattice: integers unless
  /// p_divisible (then p-power denominators), nilpotent exponents in
  /// [0, cap), non-invertible non-nilpotent exponents >= 0.
  bool declaration_valid() const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      const auto& d = table_->decl(i);
      const Rat& x = e_[i];
      Int den = boost::multiprecision::denominator(x);
      if (den != 1) {
        if (!d.p_divisible) return false;
        Int p = table_->prime();
        while (den % p == 0) den /= p;
        if (den != 1) return false;
      }
      if (d.nilpotency_cap) {
        if (x < 0 || x >= *d.nilpotency_cap) return false;
      } else if (!d.invertible && x < 0) {
        return false;
      }
    }
    return true;
  }

  /// Monomial product: entrywise sum, or nullopt when a nilpotency cap is
  /// reached (the product vanishes).
  std::optional<ExponentVector> operator+(const ExponentVector& o) const {
    require_same_table(table_, o.table_);
    ExponentVector r(table_);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] = e_[i] + o.e_[i];
      const auto& d = table_->decl(i);
      if (d.nilpotency_cap && r.e_[i] >= *d.nilpotency_cap) return std::nullopt;
    }
    return r;
  }

  /// Entrywise difference; may leave the declared lattice (used by derived
  /// gauges when probing shifts).
  ExponentVector operator-(const ExponentVector& o) const {
    require_same_table(table_, o.table_);
    ExponentVector r(table_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }

  ExponentVector scaled(const Rat& n) const {
    ExponentVector r(table_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * n;
    return r;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ < b.e_;
  }

  std::string str() const {
    std::string s;
    bool any = false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (any) s += " ";
      any = true;
      s += table_->decl(i).name;
      if (e_[i] != 1) s += "^" + e_[i].str();
    }
    return any ? s : "1";
  }

 private:
  VarTablePtr table_;
  std::vector<Rat> e_;
};

}  // namespace tate
