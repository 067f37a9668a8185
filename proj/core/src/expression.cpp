#include "stationary/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string_view>

#include "stationary/error.hpp"

namespace stationary {

struct Expression::Node {
  enum class Op { kConst, kVar, kAdd, kSub, kMul, kDiv, kPow, kNeg, kCall };
  enum class Fn { kSin, kCos, kTan, kExp, kLog, kSqrt, kSinh, kCosh, kTanh };

  Op op = Op::kConst;
  Fn fn = Fn::kSin;
  double value = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using T2 = Taylor<2>;

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr constant(double v) {
  auto n = std::make_shared<Node>();
  n->value = v;
  return n;
}

bool is_constant(const NodePtr& n, double* value) {
  if (n->op != Node::Op::kConst) return false;
  *value = n->value;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kSpecValidation, "expression '" + std::string(s_) + "': " + what +
                                                " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // expr := term (('+'|'-') term)*
  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Node::Op::kAdd, lhs, term());
      else if (accept('-')) lhs = make(Node::Op::kSub, lhs, term());
      else return lhs;
    }
  }

  // term := unary (('*'|'/') unary)*
  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Node::Op::kMul, lhs, unary());
      else if (accept('/')) lhs = make(Node::Op::kDiv, lhs, unary());
      else return lhs;
    }
  }

  // unary := '-' unary | power
  NodePtr unary() {
    if (accept('-')) return make(Node::Op::kNeg, unary());
    if (accept('+')) return unary();
    return power();
  }

  // power := primary ('^' unary)?   (right associative)
  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Node::Op::kPow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character");
  }

  NodePtr number() {
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return constant(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string_view id = s_.substr(start, pos_ - start);
    if (id == "u") return make(Node::Op::kVar);
    if (id == "pi") return constant(std::numbers::pi);

    static constexpr std::pair<std::string_view, Node::Fn> kFns[] = {
        {"sin", Node::Fn::kSin},   {"cos", Node::Fn::kCos},   {"tan", Node::Fn::kTan},
        {"exp", Node::Fn::kExp},   {"log", Node::Fn::kLog},   {"sqrt", Node::Fn::kSqrt},
        {"sinh", Node::Fn::kSinh}, {"cosh", Node::Fn::kCosh}, {"tanh", Node::Fn::kTanh},
    };
    for (const auto& [name, fn] : kFns) {
      if (id != name) continue;
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      auto call = std::make_shared<Node>();
      call->op = Node::Op::kCall;
      call->fn = fn;
      call->lhs = expr();
      if (!accept(')')) fail("expected ')'");
      return call;
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(id) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

T2 eval_node(const Node& n, const T2& u) {
  switch (n.op) {
    case Node::Op::kConst: return T2(n.value);
    case Node::Op::kVar: return u;
    case Node::Op::kAdd: return eval_node(*n.lhs, u) + eval_node(*n.rhs, u);
    case Node::Op::kSub: return eval_node(*n.lhs, u) - eval_node(*n.rhs, u);
    case Node::Op::kMul: return eval_node(*n.lhs, u) * eval_node(*n.rhs, u);
    case Node::Op::kDiv: return eval_node(*n.lhs, u) / eval_node(*n.rhs, u);
    case Node::Op::kNeg: return -eval_node(*n.lhs, u);
    case Node::Op::kPow: {
      double p;
      if (is_constant(n.rhs, &p)) return pow(eval_node(*n.lhs, u), p);
      return exp(eval_node(*n.rhs, u) * log(eval_node(*n.lhs, u)));
    }
    case Node::Op::kCall: {
      const T2 x = eval_node(*n.lhs, u);
      switch (n.fn) {
        case Node::Fn::kSin: return sin(x);
        case Node::Fn::kCos: return cos(x);
        case Node::Fn::kTan: return tan(x);
        case Node::Fn::kExp: return exp(x);
        case Node::Fn::kLog: return log(x);
        case Node::Fn::kSqrt: return sqrt(x);
        case Node::Fn::kSinh: return sinh(x);
        case Node::Fn::kCosh: return cosh(x);
        case Node::Fn::kTanh: return tanh(x);
      }
    }
  }
  return T2(0.0);
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  return e;
}

Taylor<2> Expression::eval(const Taylor<2>& u) const { return eval_node(*root_, u); }

}  // namespace stationary
