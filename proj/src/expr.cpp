#include "framecurv/expr.hpp"

#include <charconv>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace framecurv {

namespace {

const std::shared_ptr<const Node>& zero_node() {
  static const auto node = std::make_shared<const Node>(Node{ConstantNode{0.0}});
  return node;
}

std::string_view unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Tan: return "tan";
    case UnaryOp::Sinh: return "sinh";
    case UnaryOp::Cosh: return "cosh";
    case UnaryOp::Tanh: return "tanh";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Log: return "log";
    case UnaryOp::Sqrt: return "sqrt";
  }
  return "?";
}

bool lookup_function(std::string_view name, UnaryOp& op) {
  static constexpr UnaryOp kFunctions[] = {
      UnaryOp::Sin,  UnaryOp::Cos,  UnaryOp::Tan, UnaryOp::Sinh, UnaryOp::Cosh,
      UnaryOp::Tanh, UnaryOp::Exp, UnaryOp::Log, UnaryOp::Sqrt};
  for (UnaryOp f : kFunctions) {
    if (unary_name(f) == name) {
      op = f;
      return true;
    }
  }
  return false;
}

double apply_unary(UnaryOp op, double x) {
  switch (op) {
    case UnaryOp::Neg: return -x;
    case UnaryOp::Sin: return std::sin(x);
    case UnaryOp::Cos: return std::cos(x);
    case UnaryOp::Tan: return std::tan(x);
    case UnaryOp::Sinh: return std::sinh(x);
    case UnaryOp::Cosh: return std::cosh(x);
    case UnaryOp::Tanh: return std::tanh(x);
    case UnaryOp::Exp: return std::exp(x);
    case UnaryOp::Log:
      if (!(x > 0.0)) throw DomainError("log of non-positive value");
      return std::log(x);
    case UnaryOp::Sqrt:
      if (x < 0.0) throw DomainError("sqrt of negative value");
      return std::sqrt(x);
  }
  return x;
}

double apply_binary(BinaryOp op, double a, double b) {
  switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div:
      if (b == 0.0) throw DomainError("division by zero");
      return a / b;
    case BinaryOp::Pow:
      if (a == 0.0 && b < 0.0) throw DomainError("zero raised to a negative power");
      if (a < 0.0 && std::trunc(b) != b)
        throw DomainError("negative base raised to a non-integer power");
      return std::pow(a, b);
  }
  return a;
}

// Returns true and stores the folded value when op(a[, b]) is a finite
// constant.
bool try_fold(UnaryOp op, double x, double& out) {
  try {
    out = apply_unary(op, x);
  } catch (const DomainError&) {
    return false;
  }
  return std::isfinite(out);
}

bool try_fold(BinaryOp op, double a, double b, double& out) {
  try {
    out = apply_binary(op, a, b);
  } catch (const DomainError&) {
    return false;
  }
  return std::isfinite(out);
}

const UnaryNode* as_unary(const Expr& e) { return std::get_if<UnaryNode>(&e.node().value); }

Expr fold_unary(UnaryOp op, const Expr& child) {
  double v = 0.0;
  if (child.is_constant() && try_fold(op, child.constant_value(), v)) return Expr::constant(v);
  if (op == UnaryOp::Neg) {
    if (const auto* u = as_unary(child); u && u->op == UnaryOp::Neg) return u->child;
  }
  return Expr::unary(op, child);
}

Expr fold_binary(BinaryOp op, const Expr& lhs, const Expr& rhs) {
  double v = 0.0;
  if (lhs.is_constant() && rhs.is_constant() &&
      try_fold(op, lhs.constant_value(), rhs.constant_value(), v))
    return Expr::constant(v);
  switch (op) {
    case BinaryOp::Add:
      if (lhs.is_constant(0.0)) return rhs;
      if (rhs.is_constant(0.0)) return lhs;
      break;
    case BinaryOp::Sub:
      if (rhs.is_constant(0.0)) return lhs;
      if (lhs.is_constant(0.0)) return fold_unary(UnaryOp::Neg, rhs);
      break;
    case BinaryOp::Mul:
      if (lhs.is_constant(0.0) || rhs.is_constant(0.0)) return Expr::constant(0.0);
      if (lhs.is_constant(1.0)) return rhs;
      if (rhs.is_constant(1.0)) return lhs;
      if (lhs.is_constant(-1.0)) return fold_unary(UnaryOp::Neg, rhs);
      if (rhs.is_constant(-1.0)) return fold_unary(UnaryOp::Neg, lhs);
      break;
    case BinaryOp::Div:
      if (lhs.is_constant(0.0)) return Expr::constant(0.0);
      if (rhs.is_constant(1.0)) return lhs;
      break;
    case BinaryOp::Pow:
      if (rhs.is_constant(1.0)) return lhs;
      if (rhs.is_constant(0.0)) return Expr::constant(1.0);
      break;
  }
  return Expr::binary(op, lhs, rhs);
}

bool has_variables(const Expr& e) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstantNode>) {
          return false;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return has_variables(n.child);
        } else {
          return has_variables(n.lhs) || has_variables(n.rhs);
        }
      },
      e.node().value);
}

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> vars) : src_(src), vars_(vars) {}

  Expr parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    Expr e = sum();
    skip_space();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, lhs, product());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  Expr product() {
    Expr lhs = signed_term();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, signed_term());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, lhs, signed_term());
      } else {
        return lhs;
      }
    }
  }

  Expr signed_term() {
    if (accept('-')) return Expr::unary(UnaryOp::Neg, signed_term());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    Expr exponent = signed_term();
    if (has_variables(exponent)) throw ParseError(at, "exponent must not depend on a variable");
    double value = 0.0;
    try {
      value = eval(exponent, std::span<const double>{});
    } catch (const DomainError& e) {
      throw ParseError(at, std::string("exponent is undefined: ") + e.what());
    }
    if (!std::isfinite(value)) throw ParseError(at, "exponent is not finite");
    return Expr::binary(BinaryOp::Pow, base, Expr::constant(value));
  }

  Expr primary() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (!at_end() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError(start, "malformed number");
    if (!at_end() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (!at_end() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw ParseError(start, "malformed exponent in number");
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{} || ptr != src_.data() + pos_ || !std::isfinite(value))
      throw ParseError(start, "number out of range");
    return Expr::constant(value);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    skip_space();
    if (!at_end() && src_[pos_] == '(') {
      UnaryOp op{};
      if (!lookup_function(name, op))
        throw ParseError(start, "unknown function '" + std::string(name) + "'");
      ++pos_;
      Expr arg = sum();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return Expr::unary(op, arg);
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return Expr::variable(std::string(name), i);
    }
    throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

template <class Lookup>
double eval_with(const Expr& e, const Lookup& lookup) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstantNode>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return lookup(n);
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return apply_unary(n.op, eval_with(n.child, lookup));
        } else {
          const double a = eval_with(n.lhs, lookup);
          return apply_binary(n.op, a, eval_with(n.rhs, lookup));
        }
      },
      e.node().value);
}

class Differentiator {
 public:
  explicit Differentiator(std::string_view var) : var_(var) {}

  Expr operator()(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr d = derive(e);
    memo_.emplace(e.id(), d);
    return d;
  }

 private:
  Expr derive(const Expr& e) {
    const Node& n = e.node();
    if (std::holds_alternative<ConstantNode>(n.value)) return Expr::constant(0.0);
    if (const auto* v = std::get_if<VariableNode>(&n.value))
      return Expr::constant(v->name == var_ ? 1.0 : 0.0);
    if (const auto* u = std::get_if<UnaryNode>(&n.value)) {
      const Expr& x = u->child;
      const Expr dx = (*this)(x);
      if (dx.is_constant(0.0)) return dx;
      switch (u->op) {
        case UnaryOp::Neg: return -dx;
        case UnaryOp::Sin: return apply(UnaryOp::Cos, x) * dx;
        case UnaryOp::Cos: return -(apply(UnaryOp::Sin, x) * dx);
        case UnaryOp::Tan: return dx / pow(apply(UnaryOp::Cos, x), 2.0);
        case UnaryOp::Sinh: return apply(UnaryOp::Cosh, x) * dx;
        case UnaryOp::Cosh: return apply(UnaryOp::Sinh, x) * dx;
        case UnaryOp::Tanh: return dx / pow(apply(UnaryOp::Cosh, x), 2.0);
        case UnaryOp::Exp: return e * dx;
        case UnaryOp::Log: return dx / x;
        case UnaryOp::Sqrt: return dx / (2.0 * e);
      }
    }
    const auto& b = std::get<BinaryNode>(n.value);
    const Expr& f = b.lhs;
    const Expr& g = b.rhs;
    switch (b.op) {
      case BinaryOp::Add: return (*this)(f) + (*this)(g);
      case BinaryOp::Sub: return (*this)(f) - (*this)(g);
      case BinaryOp::Mul: return (*this)(f) * g + f * (*this)(g);
      case BinaryOp::Div: {
        const Expr df = (*this)(f);
        const Expr dg = (*this)(g);
        return df / g - (f * dg) / (g * g);
      }
      case BinaryOp::Pow: {
        // Exponent is a Constant by construction.
        const double k = g.constant_value();
        return (k * pow(f, k - 1.0)) * (*this)(f);
      }
    }
    return Expr::constant(0.0);
  }

  std::string_view var_;
  std::unordered_map<const void*, Expr> memo_;
};

class Simplifier {
 public:
  Expr operator()(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr s = std::visit(
        [&](const auto& n) -> Expr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ConstantNode> || std::is_same_v<T, VariableNode>) {
            return e;
          } else if constexpr (std::is_same_v<T, UnaryNode>) {
            return fold_unary(n.op, (*this)(n.child));
          } else {
            return fold_binary(n.op, (*this)(n.lhs), (*this)(n.rhs));
          }
        },
        e.node().value);
    memo_.emplace(e.id(), s);
    return s;
  }

 private:
  std::unordered_map<const void*, Expr> memo_;
};

// Printing precedence levels.
constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kSigned = 3;
constexpr int kPower = 4;
constexpr int kAtom = 5;

int precedence(const Expr& e) {
  const Node& n = e.node();
  if (const auto* u = std::get_if<UnaryNode>(&n.value))
    return u->op == UnaryOp::Neg ? kSigned : kAtom;
  if (const auto* b = std::get_if<BinaryNode>(&n.value)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub: return kSum;
      case BinaryOp::Mul:
      case BinaryOp::Div: return kProduct;
      case BinaryOp::Pow: return kPower;
    }
  }
  return kAtom;
}

void print(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(e, out);
  if (wrap) out += ')';
}

void print(const Expr& e, std::string& out) {
  const Node& n = e.node();
  if (const auto* c = std::get_if<ConstantNode>(&n.value)) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, c->value);
    const std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
    if (c->value < 0.0 || std::signbit(c->value)) {
      out += '(';
      out += text;
      out += ')';
    } else {
      out += text;
    }
    return;
  }
  if (const auto* v = std::get_if<VariableNode>(&n.value)) {
    out += v->name;
    return;
  }
  if (const auto* u = std::get_if<UnaryNode>(&n.value)) {
    if (u->op == UnaryOp::Neg) {
      out += '-';
      print_wrapped(u->child, precedence(u->child) < kSigned, out);
    } else {
      out += unary_name(u->op);
      out += '(';
      print(u->child, out);
      out += ')';
    }
    return;
  }
  const auto& b = std::get<BinaryNode>(n.value);
  const int p = precedence(e);
  if (b.op == BinaryOp::Pow) {
    print_wrapped(b.lhs, precedence(b.lhs) <= kPower, out);
    out += '^';
    print(b.rhs, out);
    return;
  }
  // Both sides parenthesized at equal precedence on the right so that the
  // reparsed tree has the same association, and hence the same value.
  print_wrapped(b.lhs, precedence(b.lhs) < p, out);
  switch (b.op) {
    case BinaryOp::Add: out += " + "; break;
    case BinaryOp::Sub: out += " - "; break;
    case BinaryOp::Mul: out += '*'; break;
    case BinaryOp::Div: out += '/'; break;
    case BinaryOp::Pow: break;
  }
  print_wrapped(b.rhs, precedence(b.rhs) <= p, out);
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{ConstantNode{value}}));
}

Expr Expr::variable(std::string name, std::size_t slot) {
  return Expr(std::make_shared<const Node>(Node{VariableNode{std::move(name), slot}}));
}

Expr Expr::unary(UnaryOp op, Expr child) {
  return Expr(std::make_shared<const Node>(Node{UnaryNode{op, std::move(child)}}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}

bool Expr::is_constant() const noexcept {
  return std::holds_alternative<ConstantNode>(node_->value);
}

bool Expr::is_constant(double value) const noexcept {
  const auto* c = std::get_if<ConstantNode>(&node_->value);
  return c != nullptr && c->value == value;
}

double Expr::constant_value() const noexcept {
  const auto* c = std::get_if<ConstantNode>(&node_->value);
  return c != nullptr ? c->value : 0.0;
}

Expr operator+(const Expr& lhs, const Expr& rhs) { return fold_binary(BinaryOp::Add, lhs, rhs); }
Expr operator-(const Expr& lhs, const Expr& rhs) { return fold_binary(BinaryOp::Sub, lhs, rhs); }
Expr operator*(const Expr& lhs, const Expr& rhs) { return fold_binary(BinaryOp::Mul, lhs, rhs); }
Expr operator/(const Expr& lhs, const Expr& rhs) { return fold_binary(BinaryOp::Div, lhs, rhs); }
Expr operator-(const Expr& e) { return fold_unary(UnaryOp::Neg, e); }
Expr operator+(const Expr& lhs, double rhs) { return lhs + Expr::constant(rhs); }
Expr operator+(double lhs, const Expr& rhs) { return Expr::constant(lhs) + rhs; }
Expr operator-(const Expr& lhs, double rhs) { return lhs - Expr::constant(rhs); }
Expr operator-(double lhs, const Expr& rhs) { return Expr::constant(lhs) - rhs; }
Expr operator*(const Expr& lhs, double rhs) { return lhs * Expr::constant(rhs); }
Expr operator*(double lhs, const Expr& rhs) { return Expr::constant(lhs) * rhs; }
Expr operator/(const Expr& lhs, double rhs) { return lhs / Expr::constant(rhs); }
Expr operator/(double lhs, const Expr& rhs) { return Expr::constant(lhs) / rhs; }

Expr pow(const Expr& base, double exponent) {
  return fold_binary(BinaryOp::Pow, base, Expr::constant(exponent));
}

Expr apply(UnaryOp op, const Expr& e) { return fold_unary(op, e); }

Expr parse_expr(std::string_view src, std::span<const std::string> vars) {
  if (vars.empty()) throw ParseError(0, "no variables declared");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!is_identifier(vars[i])) throw ParseError(0, "invalid variable name '" + vars[i] + "'");
    UnaryOp op{};
    if (lookup_function(vars[i], op))
      throw ParseError(0, "variable name '" + vars[i] + "' shadows a function");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw ParseError(0, "duplicate variable '" + vars[i] + "'");
    }
  }
  return Parser(src, vars).parse();
}

double eval(const Expr& e, std::span<const double> values) {
  auto lookup = [&](const VariableNode& v) {
    if (v.slot >= values.size()) throw DomainError("unbound variable '" + v.name + "'");
    return values[v.slot];
  };
  try {
    return eval_with(e, lookup);
  } catch (const DomainError& err) {
    throw DomainError(err.what(), {values.begin(), values.end()});
  }
}

double eval(const Expr& e, const std::map<std::string, double, std::less<>>& point) {
  auto lookup = [&](const VariableNode& v) {
    const auto it = point.find(v.name);
    if (it == point.end()) throw DomainError("unbound variable '" + v.name + "'");
    return it->second;
  };
  return eval_with(e, lookup);
}

Expr differentiate(const Expr& e, std::string_view var) { return Differentiator(var)(e); }

Expr simplify(const Expr& e) { return Simplifier()(e); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::size_t node_count(const Expr& root) {
  std::unordered_set<const void*> seen;
  std::vector<Expr> stack{root};
  while (!stack.empty()) {
    Expr e = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(e.id()).second) continue;
    if (const auto* u = std::get_if<UnaryNode>(&e.node().value)) {
      stack.push_back(u->child);
    } else if (const auto* b = std::get_if<BinaryNode>(&e.node().value)) {
      stack.push_back(b->lhs);
      stack.push_back(b->rhs);
    }
  }
  return seen.size();
}

Program::Program(std::span<const Expr> outputs) {
  std::unordered_map<const void*, std::size_t> index;
  // Iterative post-order so deep derivative chains cannot exhaust the stack.
  for (const Expr& root : outputs) {
    std::vector<std::pair<Expr, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [e, expanded] = stack.back();
      stack.pop_back();
      if (index.count(e.id())) continue;
      const Node& n = e.node();
      if (!expanded) {
        stack.emplace_back(e, true);
        if (const auto* u = std::get_if<UnaryNode>(&n.value)) {
          stack.emplace_back(u->child, false);
        } else if (const auto* b = std::get_if<BinaryNode>(&n.value)) {
          stack.emplace_back(b->rhs, false);
          stack.emplace_back(b->lhs, false);
        }
        continue;
      }
      Instr in{};
      if (const auto* c = std::get_if<ConstantNode>(&n.value)) {
        in.kind = Instr::Kind::Constant;
        in.value = c->value;
      } else if (const auto* v = std::get_if<VariableNode>(&n.value)) {
        in.kind = Instr::Kind::Variable;
        in.a = v->slot;
      } else if (const auto* u = std::get_if<UnaryNode>(&n.value)) {
        in.kind = Instr::Kind::Unary;
        in.unary = u->op;
        in.a = index.at(u->child.id());
      } else {
        const auto& b = std::get<BinaryNode>(n.value);
        in.kind = Instr::Kind::Binary;
        in.binary = b.op;
        in.a = index.at(b.lhs.id());
        in.b = index.at(b.rhs.id());
      }
      index.emplace(e.id(), code_.size());
      code_.push_back(in);
    }
    outputs_.push_back(index.at(root.id()));
  }
}

std::vector<double> Program::run(std::span<const double> values) const {
  std::vector<double> reg(code_.size());
  try {
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      switch (in.kind) {
        case Instr::Kind::Constant: reg[i] = in.value; break;
        case Instr::Kind::Variable:
          if (in.a >= values.size()) throw DomainError("unbound variable");
          reg[i] = values[in.a];
          break;
        case Instr::Kind::Unary: reg[i] = apply_unary(in.unary, reg[in.a]); break;
        case Instr::Kind::Binary: reg[i] = apply_binary(in.binary, reg[in.a], reg[in.b]); break;
      }
    }
  } catch (const DomainError& err) {
    throw DomainError(err.what(), {values.begin(), values.end()});
  }
  std::vector<double> out;
  out.reserve(outputs_.size());
  for (std::size_t idx : outputs_) out.push_back(reg[idx]);
  return out;
}

}  // namespace framecurv
