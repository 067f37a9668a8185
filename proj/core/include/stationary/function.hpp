#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "stationary/expression.hpp"
#include "stationary/hermite.hpp"

namespace stationary {

using ScalarJet = Jet1<double>;

/// A real profile u -> (f, f', f'') used for cyclic radii, centers and
/// curvature inputs. Constants, expressions and tables round-trip through
/// JSON; `custom` wraps any callable and is not serializable.
class ScalarFunction {
 public:
  struct Table {
    std::vector<double> u;
    std::vector<double> f;
    std::vector<double> df;
    std::vector<double> d2f;
  };

  ScalarFunction() : eval_([](double) { return ScalarJet{0.0, 0.0, 0.0}; }), repr_(0.0) {}

  static ScalarFunction constant(double c);
  static ScalarFunction expression(const std::string& text);
  static ScalarFunction table(Table t);
  static ScalarFunction custom(std::function<ScalarJet(double)> fn, std::string description);

  ScalarJet operator()(double u) const { return eval_(u); }
  double value(double u) const { return eval_(u).f; }

  bool serializable() const { return !custom_; }
  bool is_constant() const { return std::holds_alternative<double>(repr_); }
  bool is_expression() const { return std::holds_alternative<Expression>(repr_); }
  bool is_table() const { return std::holds_alternative<Table>(repr_); }

  double constant_value() const { return std::get<double>(repr_); }
  const Expression& expression_value() const { return std::get<Expression>(repr_); }
  const Table& table_value() const { return std::get<Table>(repr_); }
  /// Human-readable form ("1/u", "0.5", "table[n=...]", custom description).
  std::string describe() const;

 private:
  std::function<ScalarJet(double)> eval_;
  std::variant<double, Expression, Table, std::string> repr_;
  bool custom_ = false;
};

}  // namespace stationary
