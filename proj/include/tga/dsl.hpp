#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tga/constructions.hpp"

namespace tga::dsl {

/// Integer expression over named constants (p, alpha).
struct Expr {
  enum class Op { Int, Var, Neg, Add, Sub, Mul, Pow };
  Op op = Op::Int;
  long long value = 0;
  std::string name;
  std::vector<Expr> args;

  static Expr integer(long long v) { return {Op::Int, v, {}, {}}; }
  long long eval(const std::map<std::string, long long>& env) const;
  bool operator==(const Expr&) const = default;
};

/// One factor of a product: a^e, w(e) or a parameter t^e.
struct Factor {
  enum class Kind { Generator, Root, Param };
  Kind kind = Kind::Generator;
  std::string name;
  Expr exponent = Expr::integer(1);
  bool operator==(const Factor&) const = default;
};

using Product = std::vector<Factor>;  // empty means 1

/// lhs = rhs; lhs is a commutator [left, right] or the product `left`.
struct Rule {
  bool commutator = false;
  Product left, right;
  Product rhs;
  int line = 0;
  bool operator==(const Rule& o) const {
    return commutator == o.commutator && left == o.left && right == o.right && rhs == o.rhs;
  }
};

struct Param {
  std::string name;
  Expr root_order;
  bool operator==(const Param&) const = default;
};

struct Document {
  enum class Kind { Group, Algebra, Sweep };
  Kind kind = Kind::Group;
  std::string name;
  std::vector<std::string> generators;
  std::optional<Expr> modulus;
  std::vector<Param> params;
  std::vector<Rule> orders;
  std::vector<Rule> relations;
  bool operator==(const Document&) const = default;
};

Document parse(const std::string& text);
/// Canonical text; parse(print(d)) == d.
std::string print(const Document& d);

/// Concrete presentation with the named constants bound.
CollectionPresentation instantiate(const Document& d, const std::map<std::string, long long>& env = {});

}  // namespace tga::dsl
