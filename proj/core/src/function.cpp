#include "stationary/function.hpp"

#include <memory>
#include <sstream>

#include "stationary/error.hpp"

namespace stationary {

ScalarFunction ScalarFunction::constant(double c) {
  ScalarFunction f;
  f.repr_ = c;
  f.eval_ = [c](double) { return ScalarJet{c, 0.0, 0.0}; };
  return f;
}

ScalarFunction ScalarFunction::expression(const std::string& text) {
  ScalarFunction f;
  Expression e = Expression::parse(text);
  f.eval_ = [e](double u) {
    const Taylor<2> y = e.eval(Taylor<2>::variable(u));
    return ScalarJet{y.value(), y.derivative(1), y.derivative(2)};
  };
  f.repr_ = std::move(e);
  return f;
}

ScalarFunction ScalarFunction::table(Table t) {
  const std::size_t n = t.u.size();
  if (n < 2 || t.f.size() != n || t.df.size() != n || t.d2f.size() != n)
    throw Error(ErrorKind::kSpecValidation, "table needs >= 2 rows and equal-length u, f, df, d2f");
  std::vector<ScalarJet> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = {t.f[i], t.df[i], t.d2f[i]};
  std::shared_ptr<const QuinticHermite<double>> interp;
  try {
    interp = std::make_shared<const QuinticHermite<double>>(t.u, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::kSpecValidation, std::string("table: ") + e.what());
  }
  ScalarFunction f;
  f.eval_ = [interp](double u) { return (*interp)(u); };
  f.repr_ = std::move(t);
  return f;
}

ScalarFunction ScalarFunction::custom(std::function<ScalarJet(double)> fn, std::string description) {
  ScalarFunction f;
  f.eval_ = std::move(fn);
  f.repr_ = std::move(description);
  f.custom_ = true;
  return f;
}

std::string ScalarFunction::describe() const {
  if (is_constant()) {
    std::ostringstream os;
    os << constant_value();
    return os.str();
  }
  if (is_expression()) return expression_value().text();
  if (is_table()) return "table[n=" + std::to_string(table_value().u.size()) + "]";
  return std::get<std::string>(repr_);
}

}  // namespace stationary
