#include "stationary/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "stationary/error.hpp"

namespace stationary {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const ResidualReport& report) {
  out << "u,v,x,y,z,H,rhs,residual\n";
  for (const auto& r : report.rows) {
    out << format_number(r.u) << ',' << format_number(r.v) << ',' << format_number(r.x) << ','
        << format_number(r.y) << ',' << format_number(r.z) << ',' << format_number(r.H) << ','
        << format_number(r.rhs) << ',' << format_number(r.residual) << '\n';
  }
}

Json to_json(const ResidualReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"u", r.u},
                    {"v", r.v},
                    {"x", r.x},
                    {"y", r.y},
                    {"z", r.z},
                    {"H", r.H},
                    {"rhs", r.rhs},
                    {"residual", r.residual}});
  }
  return {{"alpha", report.alpha},
          {"sample_count", report.sample_count},
          {"sup_abs", report.sup_abs},
          {"rms", report.rms},
          {"rows", std::move(rows)}};
}

ResidualReport report_from_json(const Json& j) {
  try {
    ResidualReport r;
    r.alpha = j.at("alpha").get<double>();
    r.sample_count = j.at("sample_count").get<int>();
    r.sup_abs = j.at("sup_abs").get<double>();
    r.rms = j.at("rms").get<double>();
    for (const auto& row : j.at("rows")) {
      r.rows.push_back({row.at("u").get<double>(), row.at("v").get<double>(),
                        row.at("x").get<double>(), row.at("y").get<double>(),
                        row.at("z").get<double>(), row.at("H").get<double>(),
                        row.at("rhs").get<double>(), row.at("residual").get<double>()});
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kSpecValidation, std::string("residual report: ") + e.what());
  }
}

Json to_json(const FourierCoeffs& c) { return {{"u", c.u}, {"A", c.A}, {"B", c.B}}; }

// ---------------------------------------------------------------------------
// Family specs

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kSpecValidation, "field '" + field + "': " + what);
}

Json vec_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }
Json interval_json(const Interval& r) { return Json::array({r.lo, r.hi}); }

/// Field access on one JSON object with defaults, type errors that name the
/// field, and rejection of unknown keys.
class Fields {
 public:
  Fields(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) bad(path_, "expected an object");
  }

  std::string name(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  bool has(const std::string& key) const { return j_.contains(key); }

  const Json& raw(const std::string& key) {
    used_.insert(key);
    if (!j_.contains(key)) bad(name(key), "missing");
    return j_.at(key);
  }

  double number(const std::string& key, double fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    const Json& v = j_.at(key);
    if (!v.is_number()) bad(name(key), "expected a number");
    return v.get<double>();
  }

  int integer(const std::string& key, int fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    const Json& v = j_.at(key);
    if (!v.is_number_integer()) bad(name(key), "expected an integer");
    return v.get<int>();
  }

  bool boolean(const std::string& key, bool fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    const Json& v = j_.at(key);
    if (!v.is_boolean()) bad(name(key), "expected true or false");
    return v.get<bool>();
  }

  std::vector<double> numbers(const std::string& key, std::size_t size) {
    const Json& v = raw(key);
    if (!v.is_array() || (size != 0 && v.size() != size))
      bad(name(key), size ? "expected an array of " + std::to_string(size) + " numbers"
                          : "expected an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) bad(name(key), "expected numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }

  Vec3 vec(const std::string& key, const Vec3& fallback) {
    if (!j_.contains(key)) {
      used_.insert(key);
      return fallback;
    }
    const auto v = numbers(key, 3);
    return {v[0], v[1], v[2]};
  }

  Interval interval(const std::string& key, const Interval& fallback) {
    if (!j_.contains(key)) {
      used_.insert(key);
      return fallback;
    }
    const auto v = numbers(key, 2);
    return {v[0], v[1]};
  }

  ScalarFunction function(const std::string& key, const ScalarFunction& fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    return function_from_json(j_.at(key), name(key));
  }

  void finish(std::initializer_list<const char*> extra = {}) const {
    for (const char* e : extra) used_.insert(e);
    for (const auto& [key, value] : j_.items())
      if (!used_.count(key)) bad(name(key), "unknown field");
  }

 private:
  const Json& j_;
  std::string path_;
  mutable std::set<std::string> used_;
};

std::vector<Vec3> vec_list(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of 3-vectors");
  std::vector<Vec3> out;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 3 || !x[0].is_number() || !x[1].is_number() ||
        !x[2].is_number())
      bad(field, "expected an array of 3-vectors");
    out.emplace_back(x[0].get<double>(), x[1].get<double>(), x[2].get<double>());
  }
  return out;
}

Json trig_json(const TrigCurve& c) {
  Json cs = Json::array(), sn = Json::array();
  for (const auto& v : c.cos_terms) cs.push_back(vec_json(v));
  for (const auto& v : c.sin_terms) sn.push_back(vec_json(v));
  return {{"c0", vec_json(c.c0)}, {"cos", cs}, {"sin", sn}};
}

TrigCurve trig_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  TrigCurve c;
  c.c0 = f.vec("c0", Vec3::Zero());
  if (f.has("cos")) c.cos_terms = vec_list(f.raw("cos"), f.name("cos"));
  if (f.has("sin")) c.sin_terms = vec_list(f.raw("sin"), f.name("sin"));
  f.finish();
  return c;
}

std::string normalize_kind(std::string k) {
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

}  // namespace

Json to_json(const ScalarFunction& fn) {
  if (!fn.serializable())
    throw Error(ErrorKind::kSpecValidation, "function '" + fn.describe() + "' is not serializable");
  if (fn.is_constant()) return fn.constant_value();
  if (fn.is_expression()) return fn.expression_value().text();
  const auto& t = fn.table_value();
  return {{"u", t.u}, {"f", t.f}, {"df", t.df}, {"d2f", t.d2f}};
}

ScalarFunction function_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return ScalarFunction::constant(j.get<double>());
  if (j.is_string()) {
    try {
      return ScalarFunction::expression(j.get<std::string>());
    } catch (const Error& e) {
      bad(field, e.what());
    }
  }
  if (j.is_object()) {
    Fields f(j, field);
    ScalarFunction::Table t;
    t.u = f.numbers("u", 0);
    t.f = f.numbers("f", 0);
    t.df = f.numbers("df", 0);
    t.d2f = f.numbers("d2f", 0);
    f.finish();
    try {
      return ScalarFunction::table(std::move(t));
    } catch (const Error& e) {
      bad(field, e.what());
    }
  }
  bad(field, "expected a number, an expression string or a table object");
}

Json to_json(const FamilySpec& spec) {
  Json j = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, family::VectorPlane>) {
          return {{"normal", vec_json(p.normal)}, {"radius", interval_json(p.radius)}};
        } else if constexpr (std::is_same_v<T, family::AffinePlane>) {
          return {{"normal", vec_json(p.normal)},
                  {"offset", p.offset},
                  {"radius", interval_json(p.radius)}};
        } else if constexpr (std::is_same_v<T, family::Sphere>) {
          return {{"center", vec_json(p.center)}, {"radius", p.radius}};
        } else if constexpr (std::is_same_v<T, family::Torus>) {
          return {{"center", vec_json(p.center)}, {"major", p.major}, {"minor", p.minor}};
        } else if constexpr (std::is_same_v<T, family::CylinderOverCurve>) {
          Json curve = std::visit(
              [](const auto& c) -> Json {
                using C = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<C, family::CircleCurve>) {
                  return {{"type", "circle"},
                          {"center", Json::array({c.cx, c.cy})},
                          {"radius", c.radius}};
                } else if constexpr (std::is_same_v<C, family::LineCurve>) {
                  return {{"type", "line"},
                          {"point", Json::array({c.px, c.py})},
                          {"direction", Json::array({c.dx, c.dy})},
                          {"s_range", interval_json(c.s_range)}};
                } else {
                  return {{"type", "euler"},       {"alpha", c.alpha},
                          {"r0", c.r0},            {"theta0", c.theta0},
                          {"kappa0_sign", c.kappa0_sign}, {"length", c.length},
                          {"tangent_angle", c.tangent_angle}};
                }
              },
              p.curve);
          return {{"curve", curve}, {"t_range", interval_json(p.t_range)}};
        } else if constexpr (std::is_same_v<T, family::Helicoid>) {
          return {{"pitch", p.pitch},
                  {"offset", vec_json(p.offset)},
                  {"s_range", interval_json(p.s_range)},
                  {"t_range", interval_json(p.t_range)}};
        } else if constexpr (std::is_same_v<T, family::Catenoid>) {
          return {{"waist", p.waist},
                  {"offset", vec_json(p.offset)},
                  {"u_range", interval_json(p.u_range)}};
        } else if constexpr (std::is_same_v<T, family::RuledGeneric>) {
          return {{"gamma", trig_json(p.gamma)},
                  {"direction", trig_json(p.direction)},
                  {"s_range", interval_json(p.s_range)},
                  {"t_range", interval_json(p.t_range)},
                  {"striction", p.striction}};
        } else if constexpr (std::is_same_v<T, family::ParallelCyclic>) {
          return {{"a", to_json(p.a)},
                  {"b", to_json(p.b)},
                  {"r", to_json(p.r)},
                  {"u_range", interval_json(p.u_range)}};
        } else if constexpr (std::is_same_v<T, family::FrenetCyclic>) {
          return {{"kappa", to_json(p.kappa)},
                  {"tau", to_json(p.tau)},
                  {"a", to_json(p.a)},
                  {"b", to_json(p.b)},
                  {"c", to_json(p.c)},
                  {"r", to_json(p.r)},
                  {"u_range", interval_json(p.u_range)},
                  {"init",
                   {{"position", vec_json(p.init.position)},
                    {"t", vec_json(p.init.t)},
                    {"n", vec_json(p.init.n)},
                    {"b", vec_json(p.init.b)}}}};
        } else if constexpr (std::is_same_v<T, family::Inverted>) {
          if (!p.inner) throw Error(ErrorKind::kSpecValidation, "inverted spec without inner");
          return {{"inner", to_json(*p.inner)}};
        } else if constexpr (std::is_same_v<T, family::LogSpiralNeg2>) {
          return {{"u_range", interval_json(p.u_range)}};
        } else if constexpr (std::is_same_v<T, family::RiemannMinimal>) {
          return {{"c_drift", p.c_drift}, {"r0", p.r0}, {"span", p.span}};
        } else {
          return {{"kappa", to_json(p.kappa)}, {"u_range", interval_json(p.u_range)},
                  {"a0", p.a0},                {"da0", p.da0},
                  {"r0", p.r0},                {"dr0", p.dr0}};
        }
      },
      spec.params);
  j["kind"] = spec.kind();
  return j;
}

FamilySpec family_from_json(const Json& j) {
  Fields f(j, "");
  const Json& kind_json = f.raw("kind");
  if (!kind_json.is_string()) bad("kind", "expected a string");
  const std::string kind = normalize_kind(kind_json.get<std::string>());
  FamilySpec spec;

  if (kind == "vector_plane") {
    family::VectorPlane p;
    p.normal = f.vec("normal", p.normal);
    p.radius = f.interval("radius", p.radius);
    spec.params = p;
  } else if (kind == "affine_plane") {
    family::AffinePlane p;
    p.normal = f.vec("normal", p.normal);
    p.offset = f.number("offset", p.offset);
    p.radius = f.interval("radius", p.radius);
    spec.params = p;
  } else if (kind == "sphere") {
    family::Sphere p;
    p.center = f.vec("center", p.center);
    p.radius = f.number("radius", p.radius);
    spec.params = p;
  } else if (kind == "torus") {
    family::Torus p;
    p.center = f.vec("center", p.center);
    p.major = f.number("major", p.major);
    p.minor = f.number("minor", p.minor);
    spec.params = p;
  } else if (kind == "cylinder_over_curve") {
    family::CylinderOverCurve p;
    p.t_range = f.interval("t_range", p.t_range);
    Fields c(f.raw("curve"), "curve");
    const Json& type = c.raw("type");
    if (!type.is_string()) bad("curve.type", "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "circle") {
      family::CircleCurve k;
      if (c.has("center")) {
        const auto v = c.numbers("center", 2);
        k.cx = v[0];
        k.cy = v[1];
      }
      k.radius = c.number("radius", k.radius);
      p.curve = k;
    } else if (t == "line") {
      family::LineCurve k;
      if (c.has("point")) {
        const auto v = c.numbers("point", 2);
        k.px = v[0];
        k.py = v[1];
      }
      if (c.has("direction")) {
        const auto v = c.numbers("direction", 2);
        k.dx = v[0];
        k.dy = v[1];
      }
      k.s_range = c.interval("s_range", k.s_range);
      p.curve = k;
    } else if (t == "euler") {
      family::EulerCurve k;
      k.alpha = c.number("alpha", k.alpha);
      k.r0 = c.number("r0", k.r0);
      k.theta0 = c.number("theta0", k.theta0);
      k.kappa0_sign = c.integer("kappa0_sign", k.kappa0_sign);
      k.length = c.number("length", k.length);
      k.tangent_angle = c.number("tangent_angle", k.tangent_angle);
      p.curve = k;
    } else {
      bad("curve.type", "expected circle, line or euler");
    }
    c.finish();
    spec.params = p;
  } else if (kind == "helicoid") {
    family::Helicoid p;
    p.pitch = f.number("pitch", p.pitch);
    p.offset = f.vec("offset", p.offset);
    p.s_range = f.interval("s_range", p.s_range);
    p.t_range = f.interval("t_range", p.t_range);
    spec.params = p;
  } else if (kind == "catenoid") {
    family::Catenoid p;
    p.waist = f.number("waist", p.waist);
    p.offset = f.vec("offset", p.offset);
    p.u_range = f.interval("u_range", p.u_range);
    spec.params = p;
  } else if (kind == "ruled_generic") {
    family::RuledGeneric p;
    p.gamma = trig_from_json(f.raw("gamma"), "gamma");
    p.direction = trig_from_json(f.raw("direction"), "direction");
    p.s_range = f.interval("s_range", p.s_range);
    p.t_range = f.interval("t_range", p.t_range);
    p.striction = f.boolean("striction", p.striction);
    spec.params = p;
  } else if (kind == "parallel_cyclic") {
    family::ParallelCyclic p;
    p.a = f.function("a", p.a);
    p.b = f.function("b", p.b);
    p.r = f.function("r", ScalarFunction::constant(1.0));
    p.u_range = f.interval("u_range", p.u_range);
    spec.params = p;
  } else if (kind == "frenet_cyclic") {
    family::FrenetCyclic p;
    p.kappa = f.function("kappa", ScalarFunction::constant(1.0));
    p.tau = f.function("tau", p.tau);
    p.a = f.function("a", p.a);
    p.b = f.function("b", p.b);
    p.c = f.function("c", p.c);
    p.r = f.function("r", ScalarFunction::constant(1.0));
    p.u_range = f.interval("u_range", p.u_range);
    if (f.has("init")) {
      Fields i(f.raw("init"), "init");
      p.init.position = i.vec("position", p.init.position);
      p.init.t = i.vec("t", p.init.t);
      p.init.n = i.vec("n", p.init.n);
      p.init.b = i.vec("b", p.init.b);
      i.finish();
    }
    spec.params = p;
  } else if (kind == "inverted") {
    try {
      spec = invert_spec(family_from_json(f.raw("inner")));
    } catch (const Error& e) {
      throw Error(ErrorKind::kSpecValidation, std::string("inner: ") + e.what());
    }
  } else if (kind == "log_spiral_neg2") {
    family::LogSpiralNeg2 p;
    p.u_range = f.interval("u_range", p.u_range);
    spec.params = p;
  } else if (kind == "riemann_minimal") {
    family::RiemannMinimal p;
    p.c_drift = f.number("c_drift", p.c_drift);
    p.r0 = f.number("r0", p.r0);
    p.span = f.number("span", p.span);
    spec.params = p;
  } else if (kind == "neg2_ode") {
    family::Neg2Ode p;
    p.kappa = f.function("kappa", ScalarFunction::expression("1/u"));
    p.u_range = f.interval("u_range", p.u_range);
    p.a0 = f.number("a0", p.a0);
    p.da0 = f.number("da0", p.da0);
    p.r0 = f.number("r0", p.r0);
    p.dr0 = f.number("dr0", p.dr0);
    spec.params = p;
  } else {
    bad("kind", "unknown family '" + kind + "'");
  }
  f.finish();
  return spec;
}

void write_csv(std::ostream& out, const std::vector<CoeffRow>& rows) {
  out << "s,A0,A1,A2,A3,A4\n";
  for (const auto& r : rows) {
    out << format_number(r.s);
    for (double a : r.A) out << ',' << format_number(a);
    out << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<Neg2Sample>& solution) {
  out << "u,a,r,kappa\n";
  for (const auto& s : solution)
    out << format_number(s.u) << ',' << format_number(s.a) << ',' << format_number(s.r) << ','
        << format_number(s.kappa) << '\n';
}

void write_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
  out << "step,energy,grad_max,dt\n";
  for (const auto& t : trace)
    out << t.step << ',' << format_number(t.energy) << ',' << format_number(t.grad_max) << ','
        << format_number(t.dt) << '\n';
}

void write_obj(std::ostream& out, const TriMesh& mesh) {
  for (const auto& v : mesh.vertices)
    out << "v " << format_number(v.x()) << ' ' << format_number(v.y()) << ' '
        << format_number(v.z()) << '\n';
  for (const auto& t : mesh.triangles)
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

TriMesh read_obj(std::istream& in) {
  TriMesh mesh;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::kIo, "obj line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) fail("malformed vertex");
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> ids;
      std::string tok;
      while (ls >> tok) {
        int idx = 0;
        const auto slash = tok.find('/');
        const std::string head = tok.substr(0, slash);
        const auto res = std::from_chars(head.data(), head.data() + head.size(), idx);
        if (res.ec != std::errc() || idx == 0) fail("malformed face index '" + tok + "'");
        idx = idx > 0 ? idx - 1 : static_cast<int>(mesh.vertices.size()) + idx;
        if (idx < 0 || idx >= static_cast<int>(mesh.vertices.size())) fail("face index out of range");
        ids.push_back(idx);
      }
      if (ids.size() < 3) fail("face needs at least 3 vertices");
      for (std::size_t k = 1; k + 1 < ids.size(); ++k) mesh.triangles.push_back({ids[0], ids[k], ids[k + 1]});
    }
  }
  return mesh;
}

}  // namespace stationary
