#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tate/rational.hpp"

namespace tate {

/// Declaration of one monomial variable.  Invertible variables admit
/// negative exponents; a nilpotency cap n means x^n = 0; p_divisible
/// admits exponents with p-power denominators (the T^{1/p^inf} case).
struct VariableDecl {
  std::string name;
  bool invertible = false;
  std::optional<long> nilpotency_cap;
  bool p_divisible = false;
};

/// Shared declaration context: the model prime and the variable list.
/// Everything downstream (elements, gauges, rings) holds a pointer to one
/// of these; operations on mismatched tables are declaration errors.
class VarTable {
 public:
  VarTable(Int prime, std::vector<VariableDecl> vars)
      : prime_(std::move(prime)), vars_(std::move(vars)) {
    if (prime_ < 2) throw std::invalid_argument("VarTable: prime must be >= 2");
    for (const auto& v : vars_) {
      if (v.nilpotency_cap && v.invertible)
        throw std::invalid_argument("VarTable: variable '" + v.name +
                                    "' cannot be both nilpotent and invertible");
      if (v.nilpotency_cap && *v.nilpotency_cap < 1)
        throw std::invalid_argument("VarTable: nilpotency cap must be positive");
      for (const auto& w : vars_)
        if (&v != &w && v.name == w.name)
          throw std::invalid_argument("VarTable: duplicate variable '" + v.name + "'");
    }
  }

  const Int& prime() const { return prime_; }
  std::size_t size() const { return vars_.size(); }
  const VariableDecl& decl(std::size_t i) const { return vars_.at(i); }
  const std::vector<VariableDecl>& decls() const { return vars_; }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }
  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("VarTable: unknown variable '" + name + "'");
    return *i;
  }

  friend bool operator==(const VarTable& a, const VarTable& b) {
    if (a.prime_ != b.prime_ || a.vars_.size() != b.vars_.size()) return false;
    for (std::size_t i = 0; i < a.vars_.size(); ++i) {
      const auto &x = a.vars_[i], &y = b.vars_[i];
      if (x.name != y.name || x.invertible != y.invertible ||
          x.nilpotency_cap != y.nilpotency_cap || x.p_divisible != y.p_divisible)
        return false;
    }
    return true;
  }

 private:
  Int prime_;
  std::vector<VariableDecl> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline void require_same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a.get() != b.get() && !(a && b && *a == *b))
    throw std::invalid_argument("mismatched variable declaration sets");
}

}  // namespace tate
