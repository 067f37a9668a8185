#pragma once

#include <memory>
#include <string>

#include "stationary/taylor.hpp"

namespace stationary {

/// One-variable arithmetic expression in `u`.
///
/// Grammar: numbers, `u`, `pi`, + - * / ^, unary minus, parentheses and
/// the functions sin cos tan exp log sqrt sinh cosh tanh. Evaluation runs
/// on second-order Taylor jets so profiles come with exact f' and f''.
class Expression {
 public:
  /// Throws Error(kSpecValidation) naming the offending position.
  static Expression parse(const std::string& text);

  const std::string& text() const { return text_; }

  Taylor<2> eval(const Taylor<2>& u) const;
  double operator()(double u) const { return eval(Taylor<2>(u)).value(); }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace stationary
