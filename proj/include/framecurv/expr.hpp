#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "framecurv/errors.hpp"

namespace framecurv {

enum class UnaryOp { Neg, Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct Node;

/// Immutable scalar expression over a list of chart variables.
///
/// An Expr is a handle to a shared, immutable node. Subtrees may be shared
/// between expressions (derivatives reuse the nodes of their source), so
/// the structure is a DAG; every operation treats it as a tree.
///
/// Variables carry both their name and their slot, the index of the name
/// in the variable list the expression was built against. Numeric
/// evaluation addresses values by slot.
class Expr {
 public:
  /// Constant zero.
  Expr();

  // Raw constructors: build exactly the requested node.
  static Expr constant(double value);
  static Expr variable(std::string name, std::size_t slot);
  static Expr unary(UnaryOp op, Expr child);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  const Node& node() const noexcept { return *node_; }
  const void* id() const noexcept { return node_.get(); }

  bool is_constant() const noexcept;
  bool is_constant(double value) const noexcept;
  /// Value of a Constant node. Only meaningful when is_constant().
  double constant_value() const noexcept;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct ConstantNode {
  double value;
};

struct VariableNode {
  std::string name;
  std::size_t slot;
};

struct UnaryNode {
  UnaryOp op;
  Expr child;
};

struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};

struct Node {
  std::variant<ConstantNode, VariableNode, UnaryNode, BinaryNode> value;
};

// Folding constructors. These apply the same light normalization as
// simplify() to the node they create (children are taken as given), so
// formulas assembled with them stay small.
Expr operator+(const Expr& lhs, const Expr& rhs);
Expr operator-(const Expr& lhs, const Expr& rhs);
Expr operator*(const Expr& lhs, const Expr& rhs);
Expr operator/(const Expr& lhs, const Expr& rhs);
Expr operator-(const Expr& e);
Expr operator+(const Expr& lhs, double rhs);
Expr operator+(double lhs, const Expr& rhs);
Expr operator-(const Expr& lhs, double rhs);
Expr operator-(double lhs, const Expr& rhs);
Expr operator*(const Expr& lhs, double rhs);
Expr operator*(double lhs, const Expr& rhs);
Expr operator/(const Expr& lhs, double rhs);
Expr operator/(double lhs, const Expr& rhs);
Expr pow(const Expr& base, double exponent);
Expr apply(UnaryOp op, const Expr& e);

/// Parses infix text over the declared variables.
///
/// Grammar (whitespace insignificant):
///
///     sum     := product (('+' | '-') product)*
///     product := signed (('*' | '/') signed)*
///     signed  := '-' signed | power
///     power   := primary ('^' signed)?          right-associative
///     primary := number | identifier | identifier '(' sum ')' | '(' sum ')'
///
/// The exponent of '^' must not depend on any variable; it is folded into
/// a single Constant node.
///
/// Throws ParseError on a syntax error, an undeclared identifier, an
/// unknown function, or a variable-dependent exponent.
Expr parse_expr(std::string_view src, std::span<const std::string> vars);

/// Evaluates with values[slot] bound to each variable.
/// Throws DomainError on log of a non-positive value, sqrt of a negative
/// value, division by exact zero, 0 raised to a negative power, or a
/// negative base raised to a non-integer power.
double eval(const Expr& e, std::span<const double> values);

/// Evaluates with variables looked up by name. Throws DomainError if a
/// variable is unbound.
double eval(const Expr& e, const std::map<std::string, double, std::less<>>& point);

/// Exact symbolic partial derivative with respect to the named variable.
Expr differentiate(const Expr& e, std::string_view var);

/// Light normalization: constant folding and the identities
/// x*0 -> 0, x*1 -> x, x+0 -> x, x-0 -> x, 0/x -> 0, x/1 -> x, x^1 -> x,
/// x^0 -> 1, -(-x) -> x.
Expr simplify(const Expr& e);

/// Infix text that parse_expr accepts and that evaluates identically.
std::string to_string(const Expr& e);

/// Number of distinct nodes reachable from e.
std::size_t node_count(const Expr& e);

/// Compiled form of one or more expressions. Shared nodes are evaluated
/// once per call, which keeps the cost of deeply nested derivatives linear
/// in the number of distinct nodes.
class Program {
 public:
  explicit Program(std::span<const Expr> outputs);

  std::size_t output_count() const noexcept { return outputs_.size(); }

  /// Same semantics and DomainError conditions as eval().
  std::vector<double> run(std::span<const double> values) const;

 private:
  struct Instr {
    enum class Kind { Constant, Variable, Unary, Binary } kind;
    UnaryOp unary{};
    BinaryOp binary{};
    double value = 0.0;
    std::size_t a = 0;
    std::size_t b = 0;
  };

  std::vector<Instr> code_;
  std::vector<std::size_t> outputs_;
};

}  // namespace framecurv
