#include "stationary_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "stationary/catalog.hpp"
#include "stationary/error.hpp"
#include "stationary/flow.hpp"
#include "stationary/inversion.hpp"
#include "stationary/io.hpp"
#include "stationary/ruled.hpp"
#include "stationary/stationary.hpp"

namespace stationary::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::kSpecValidation, what); }

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

// ---------------------------------------------------------------- parsing --

double parse_number(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    invalid(flag + ": expected a number, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(x)) invalid(flag + ": expected a number, got '" + text + "'");
  return x;
}

std::vector<double> parse_list(const std::string& text, char sep, std::size_t n,
                               const std::string& flag) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) xs.push_back(parse_number(item, flag));
  if (xs.size() != n || (!text.empty() && text.back() == sep)) {
    invalid(flag + ": expected " + std::to_string(n) + " values separated by '" + sep + "', got '" +
            text + "'");
  }
  return xs;
}

Json vector_value(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, ',', 3, flag);
  return Json::array({v[0], v[1], v[2]});
}

Json interval_value(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, ':', 2, flag);
  return Json::array({v[0], v[1]});
}

// A number stays a constant profile; anything else is an expression in u.
Json function_value(const std::string& text) {
  std::size_t used = 0;
  try {
    const double x = std::stod(text, &used);
    if (used == text.size() && std::isfinite(x)) return x;
  } catch (const std::exception&) {
  }
  return text;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) invalid("--grid: expected NxM, got '" + text + "'");
  int nu = 0, nv = 0;
  try {
    std::size_t a = 0, b = 0;
    nu = std::stoi(text.substr(0, x), &a);
    nv = std::stoi(text.substr(x + 1), &b);
    if (a != x || b != text.size() - x - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    invalid("--grid: expected NxM, got '" + text + "'");
  }
  if (nu < 2 || nv < 2) invalid("--grid: both sizes must be >= 2");
  return {nu, nv};
}

// --------------------------------------------------------------- families --

enum class Value { kNumber, kVector, kInterval, kFunction };

struct FlagTarget {
  std::string key;
  Value type;
};

// Flags accepted by each family when it is described on the command line.
const std::map<std::string, std::map<std::string, FlagTarget>>& family_flags() {
  using V = Value;
  static const std::map<std::string, std::map<std::string, FlagTarget>> table{
      {"vector_plane", {{"normal", {"normal", V::kVector}}, {"radius", {"radius", V::kInterval}}}},
      {"affine_plane",
       {{"normal", {"normal", V::kVector}},
        {"offset", {"offset", V::kNumber}},
        {"radius", {"radius", V::kInterval}}}},
      {"sphere", {{"center", {"center", V::kVector}}, {"radius", {"radius", V::kNumber}}}},
      {"torus",
       {{"center", {"center", V::kVector}},
        {"major", {"major", V::kNumber}},
        {"minor", {"minor", V::kNumber}}}},
      {"helicoid",
       {{"pitch", {"pitch", V::kNumber}},
        {"offset", {"offset", V::kVector}},
        {"u", {"s_range", V::kInterval}},
        {"v", {"t_range", V::kInterval}}}},
      {"catenoid",
       {{"waist", {"waist", V::kNumber}},
        {"offset", {"offset", V::kVector}},
        {"u", {"u_range", V::kInterval}}}},
      {"parallel_cyclic",
       {{"a", {"a", V::kFunction}},
        {"b", {"b", V::kFunction}},
        {"r", {"r", V::kFunction}},
        {"u", {"u_range", V::kInterval}}}},
      {"frenet_cyclic",
       {{"kappa", {"kappa", V::kFunction}},
        {"tau", {"tau", V::kFunction}},
        {"a", {"a", V::kFunction}},
        {"b", {"b", V::kFunction}},
        {"c", {"c", V::kFunction}},
        {"r", {"r", V::kFunction}},
        {"u", {"u_range", V::kInterval}}}},
      {"log_spiral_neg2", {{"u", {"u_range", V::kInterval}}}},
      {"riemann_minimal",
       {{"c-drift", {"c_drift", V::kNumber}},
        {"r0", {"r0", V::kNumber}},
        {"span", {"span", V::kNumber}}}},
      {"neg2_ode",
       {{"kappa", {"kappa", V::kFunction}},
        {"u", {"u_range", V::kInterval}},
        {"a0", {"a0", V::kNumber}},
        {"da0", {"da0", V::kNumber}},
        {"r0", {"r0", V::kNumber}},
        {"dr0", {"dr0", V::kNumber}}}},
  };
  return table;
}

const std::vector<std::string>& family_flag_names() {
  static const std::vector<std::string> names{"normal", "radius", "offset", "center", "major",
                                              "minor",  "pitch",  "waist",  "u",      "v",
                                              "a",      "b",      "c",      "r",      "kappa",
                                              "tau",    "c-drift", "r0",    "span",   "a0",
                                              "da0",    "dr0"};
  return names;
}

struct FamilyArgs {
  std::string family;
  std::string spec_path;
  std::map<std::string, std::string> values;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family, "family name, e.g. sphere, catenoid, neg2-ode");
  cmd->add_option("--spec", args.spec_path, "JSON family spec file");
  for (const auto& name : family_flag_names()) {
    cmd->add_option_function<std::string>(
        "--" + name, [&args, name](const std::string& v) { args.values[name] = v; },
        "family parameter");
  }
}

std::string normalize(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json family_json(const FamilyArgs& args) {
  const bool has_family = !args.family.empty(), has_spec = !args.spec_path.empty();
  if (has_family == has_spec) invalid("exactly one of --family and --spec is required");
  if (has_spec) {
    if (!args.values.empty()) {
      invalid("--" + args.values.begin()->first + " cannot be combined with --spec");
    }
    Json j;
    try {
      j = Json::parse(read_file(args.spec_path));
    } catch (const Json::parse_error& e) {
      invalid("--spec: malformed JSON in '" + args.spec_path + "': " + e.what());
    }
    return j;
  }
  const std::string kind = normalize(args.family);
  const auto& table = family_flags();
  const auto it = table.find(kind);
  if (it == table.end()) {
    invalid("--family: '" + args.family + "' is not available from flags (use --spec for " +
            "cylinder_over_curve, ruled_generic and inverted)");
  }
  Json j{{"kind", kind}};
  for (const auto& [flag, text] : args.values) {
    const auto t = it->second.find(flag);
    if (t == it->second.end()) invalid("--" + flag + " does not apply to family " + kind);
    const std::string name = "--" + flag;
    switch (t->second.type) {
      case Value::kNumber: j[t->second.key] = parse_number(text, name); break;
      case Value::kVector: j[t->second.key] = vector_value(text, name); break;
      case Value::kInterval: j[t->second.key] = interval_value(text, name); break;
      case Value::kFunction: j[t->second.key] = function_value(text); break;
    }
  }
  return j;
}

FamilySpec load_family(const FamilyArgs& args) {
  FamilySpec spec = family_from_json(family_json(args));
  validate(spec);
  return spec;
}

// ---------------------------------------------------------------- outputs --

// Output files are staged in memory and only land on disk once the command
// has finished without error.
class Outputs {
 public:
  void reserve(const std::string& path, const std::string& flag) {
    if (path.empty()) return;
    const std::filesystem::path p(path);
    const auto probe = temp_name(p);
    {
      std::ofstream f(probe, std::ios::binary);
      if (!f) throw Error(ErrorKind::kIo, flag + ": cannot write '" + path + "'");
    }
    std::error_code ec;
    std::filesystem::remove(probe, ec);
  }

  void add(const std::string& path, std::string content) {
    if (!path.empty()) files_.emplace_back(path, std::move(content));
  }

  void commit() {
    std::vector<std::filesystem::path> temps;
    auto discard = [&] {
      std::error_code ec;
      for (const auto& t : temps) std::filesystem::remove(t, ec);
    };
    for (const auto& [path, content] : files_) {
      const auto tmp = temp_name(path);
      std::ofstream f(tmp, std::ios::binary);
      f << content;
      f.close();
      temps.push_back(tmp);
      if (!f) {
        discard();
        throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
      }
    }
    for (std::size_t i = 0; i < files_.size(); ++i) {
      std::error_code ec;
      std::filesystem::rename(temps[i], files_[i].first, ec);
      if (ec) {
        discard();
        throw Error(ErrorKind::kIo, "cannot write '" + files_[i].first + "': " + ec.message());
      }
    }
  }

 private:
  static std::filesystem::path temp_name(const std::filesystem::path& p) {
    auto t = p;
    t += ".partial";
    return t;
  }

  std::vector<std::pair<std::string, std::string>> files_;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string obj_text(const TriMesh& mesh) {
  std::ostringstream os;
  write_obj(os, mesh);
  return os.str();
}

std::string residual_text(const ResidualReport& report, const std::string& path) {
  if (ends_with(path, ".csv")) {
    std::ostringstream os;
    write_csv(os, report);
    return os.str();
  }
  return dump(to_json(report));
}

std::string residual_summary(const ResidualReport& r) {
  return "sup|residual| = " + sci(r.sup_abs) + " over " + std::to_string(r.sample_count) +
         " samples (alpha = " + format_number(r.alpha) + ", rms " + sci(r.rms) + ")";
}

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

// --------------------------------------------------------------- commands --

struct Common {
  FamilyArgs family;
  std::optional<double> alpha;
  std::string grid = "64x64";
  std::string out;
  std::string export_path;
};

double require_alpha(const Common& c) {
  if (!c.alpha) invalid("--alpha is required");
  if (!std::isfinite(*c.alpha)) invalid("--alpha must be finite");
  return *c.alpha;
}

struct Context {
  std::ostream& out;
  Outputs files;
};

void cmd_verify(const Common& c, Context& ctx) {
  const double alpha = require_alpha(c);
  const auto [nu, nv] = parse_grid(c.grid);
  const FamilySpec spec = load_family(c.family);
  ctx.files.reserve(c.out, "--out");
  const ResidualReport rep = residual_grid(make_patch(spec), alpha, nu, nv);
  ctx.files.add(c.out, residual_text(rep, c.out));
  ctx.out << spec.kind() << ": " << residual_summary(rep) << "\n";
}

void cmd_energy(const Common& c, Context& ctx) {
  const double alpha = require_alpha(c);
  const auto [nu, nv] = parse_grid(c.grid);
  const FamilySpec spec = load_family(c.family);
  ctx.files.reserve(c.out, "--out");
  const double e = energy(make_patch(spec), alpha, nu, nv);
  ctx.files.add(c.out, dump(Json{{"kind", spec.kind()},
                                 {"alpha", alpha},
                                 {"grid", Json::array({nu, nv})},
                                 {"energy", e}}));
  ctx.out << spec.kind() << ": energy = " << format_number(e) << " (alpha = " << format_number(alpha)
          << ", " << nu << "x" << nv << " quadrature)\n";
}

void cmd_coeffs(const Common& c, int samples, Context& ctx) {
  const double alpha = require_alpha(c);
  if (samples < 1) invalid("--samples must be >= 1");
  const FamilySpec spec = load_family(c.family);
  ctx.files.reserve(c.out, "--out");

  std::ostringstream csv;
  double worst = 0;
  if (const auto* cyl = std::get_if<family::CylinderOverCurve>(&spec.params)) {
    const auto pairs = cylinder_check(planar_curve(*cyl), alpha, samples);
    csv << "s,C2,C0\n";
    for (const auto& p : pairs) {
      csv << format_number(p.s) << ',' << format_number(p.C2) << ',' << format_number(p.C0) << '\n';
      worst = std::max({worst, std::abs(p.C2), std::abs(p.C0)});
    }
    ctx.out << spec.kind() << ": max|C2|,|C0| = " << sci(worst) << " over " << pairs.size()
            << " stations (alpha = " << format_number(alpha) << ")\n";
  } else if (const auto* rg = std::get_if<family::RuledGeneric>(&spec.params)) {
    RuledSpec rs{rg->gamma, normalized(rg->direction), rg->s_range, rg->t_range, false};
    if (rg->striction) rs = striction_line(rs);
    std::vector<CoeffRow> rows;
    for (int i = 0; i < samples; ++i) {
      const double s = rs.s_range.lo + (i + 0.5) * rs.s_range.length() / samples;
      rows.push_back({s, ruled_coeffs(rs, alpha, s)});
      for (double a : rows.back().A) worst = std::max(worst, std::abs(a));
    }
    write_csv(csv, rows);
    ctx.out << spec.kind() << ": max|A_n| = " << sci(worst) << " over " << rows.size()
            << " stations (alpha = " << format_number(alpha) << ")\n";
  } else {
    invalid("coeffs needs a ruled_generic or cylinder_over_curve family, got " + spec.kind());
  }
  ctx.files.add(c.out, csv.str());
}

void cmd_fourier(const Common& c, double u, int n_max, int nv, Context& ctx) {
  const double alpha = require_alpha(c);
  if (n_max < 0) invalid("--nmax must be >= 0");
  const FamilySpec spec = load_family(c.family);
  ctx.files.reserve(c.out, "--out");
  const FourierCoeffs fc = fourier_defect(make_patch(spec), alpha, u, n_max, nv);
  Json j = to_json(fc);
  j["kind"] = spec.kind();
  j["alpha"] = alpha;
  ctx.files.add(c.out, dump(j));
  double top = 0;
  for (double a : fc.A) top = std::max(top, std::abs(a));
  for (double b : fc.B) top = std::max(top, std::abs(b));
  ctx.out << spec.kind() << ": band-limited to n <= " << n_max << " at u = " << format_number(u)
          << ", max coefficient " << sci(top) << "\n";
}

void cmd_generate(const Common& c, const std::string& csv_path, Context& ctx) {
  const FamilySpec spec = load_family(c.family);
  const bool neg2 = std::holds_alternative<family::Neg2Ode>(spec.params);
  if (!neg2 && !std::holds_alternative<family::RiemannMinimal>(spec.params)) {
    invalid("generate needs a neg2_ode or riemann_minimal family, got " + spec.kind());
  }
  if (!csv_path.empty() && !neg2) invalid("--csv applies to neg2_ode only");
  const auto [nu, nv] = parse_grid(c.grid);
  const std::string out = c.out.empty() ? "generated.json" : c.out;
  ctx.files.reserve(out, "--out");
  ctx.files.reserve(c.export_path, "--export");
  ctx.files.reserve(csv_path, "--csv");

  const FamilySpec table = tabulate(spec);
  ctx.files.add(out, dump(to_json(table)));
  const ParametricPatch patch = make_patch(table);
  if (!c.export_path.empty()) ctx.files.add(c.export_path, obj_text(sample_mesh(patch, nu, nv).mesh));

  if (neg2) {
    const auto& n = std::get<family::Neg2Ode>(spec.params);
    const Neg2Family fam = integrate_neg2_family(n.kappa, n.a0, n.da0, n.r0, n.dr0, n.u_range);
    double eq22 = 0;
    for (const auto& s : fam.solution) eq22 = std::max(eq22, std::abs(s.eq22));
    if (!csv_path.empty()) {
      std::ostringstream os;
      write_csv(os, fam.solution);
      ctx.files.add(csv_path, os.str());
    }
    ctx.out << "neg2_ode: " << fam.solution.size() << " samples on [" << format_number(n.u_range.lo)
            << ", " << format_number(n.u_range.hi) << "], r(end) = "
            << format_number(fam.solution.back().r) << ", max|companion residual| = " << sci(eq22)
            << "\n";
  } else {
    const Interval ur = patch.u_range();
    ctx.out << "riemann_minimal: tabulated on [" << format_number(ur.lo) << ", "
            << format_number(ur.hi) << "]\n";
  }
}

void cmd_invert(const Common& c, Context& ctx) {
  const FamilySpec spec = load_family(c.family);
  if (c.out.empty() && c.export_path.empty() && !c.alpha) {
    invalid("invert needs --out, --export or --alpha");
  }
  const auto [nu, nv] = parse_grid(c.grid);
  ctx.files.reserve(c.out, "--out");
  ctx.files.reserve(c.export_path, "--export");
  const FamilySpec image = invert_spec(spec);
  validate(image);
  const ParametricPatch patch = make_patch(image);
  ctx.files.add(c.out, dump(to_json(image)));
  if (!c.export_path.empty()) ctx.files.add(c.export_path, obj_text(sample_mesh(patch, nu, nv).mesh));
  ctx.out << "inverted " << spec.kind();
  if (c.alpha) {
    const double a = inverted_exponent(require_alpha(c));
    ctx.out << ": " << residual_summary(residual_grid(patch, a, nu, nv));
  }
  ctx.out << "\n";
}

void cmd_verify_shift(const Common& c, const std::string& direction, Context& ctx) {
  const double alpha = require_alpha(c);
  if (direction != "forward" && direction != "inverse") {
    invalid("--direction: expected forward or inverse, got '" + direction + "'");
  }
  const auto [nu, nv] = parse_grid(c.grid);
  const FamilySpec spec = load_family(c.family);
  ctx.files.reserve(c.out, "--out");
  const ShiftReport rep = verify_shift(make_patch(spec), alpha, nu, nv);
  const bool inverse = direction == "inverse";
  const ResidualReport& first = inverse ? rep.image : rep.source;
  const ResidualReport& second = inverse ? rep.source : rep.image;
  const std::string first_name = inverse ? "inverted " + spec.kind() : spec.kind();
  const std::string second_name = inverse ? spec.kind() : "inverted " + spec.kind();
  ctx.files.add(c.out, dump(Json{{"direction", direction},
                                 {"source", to_json(first)},
                                 {"image", to_json(second)}}));
  ctx.out << first_name << " at alpha = " << format_number(first.alpha) << ": sup|residual| = "
          << sci(first.sup_abs) << "; " << second_name << " at alpha = " << format_number(second.alpha)
          << ": sup|residual| = " << sci(second.sup_abs) << " over " << second.sample_count
          << " samples\n";
}

struct FlowArgs {
  std::string mesh;
  int steps = 100;
  double dt = 1e-3;
  std::string rule = "backtracking";
  double noise = 0;
  std::uint64_t seed = 0;
};

void cmd_flow(const Common& c, const FlowArgs& f, Context& ctx) {
  const double alpha = require_alpha(c);
  if (f.steps < 0) invalid("--steps must be >= 0");
  if (!(f.dt > 0)) invalid("--dt must be > 0");
  if (!(f.noise >= 0)) invalid("--noise must be >= 0");
  DescentOptions opt;
  opt.steps = f.steps;
  opt.dt = f.dt;
  if (f.rule == "fixed") {
    opt.rule = StepRule::kFixed;
  } else if (f.rule == "backtracking") {
    opt.rule = StepRule::kBacktracking;
  } else {
    invalid("--rule: expected fixed or backtracking, got '" + f.rule + "'");
  }

  TriMesh mesh;
  if (!f.mesh.empty()) {
    if (!c.family.family.empty() || !c.family.spec_path.empty()) {
      invalid("--mesh cannot be combined with --family or --spec");
    }
    std::ifstream in(f.mesh);
    if (!in) throw Error(ErrorKind::kIo, "--mesh: cannot read '" + f.mesh + "'");
    mesh = read_obj(in);
  } else {
    const auto [nu, nv] = parse_grid(c.grid);
    mesh = sample_mesh(make_patch(load_family(c.family)), nu, nv).mesh;
  }
  ctx.files.reserve(c.out, "--out");
  ctx.files.reserve(c.export_path, "--export");

  if (f.noise > 0) {
    std::mt19937_64 gen(f.seed);
    for (auto& v : mesh.vertices)
      for (int k = 0; k < 3; ++k) v[k] += f.noise * (2 * unit_uniform(gen) - 1);
  }

  const DescentResult res = descend(mesh, alpha, opt);
  if (res.stop_kind) throw Error(*res.stop_kind, "flow stopped: " + res.stop_reason);

  std::ostringstream trace;
  write_csv(trace, res.trace);
  ctx.files.add(c.out, trace.str());
  ctx.files.add(c.export_path, obj_text(res.mesh));
  const auto& first = res.trace.front();
  const auto& last = res.trace.back();
  ctx.out << "flow: energy " << format_number(first.energy) << " -> " << format_number(last.energy)
          << " in " << last.step << " steps, grad_max " << sci(last.grad_max) << "\n";
}

void cmd_export(const Common& c, Context& ctx) {
  const auto [nu, nv] = parse_grid(c.grid);
  const FamilySpec spec = load_family(c.family);
  const std::string path = !c.export_path.empty() ? c.export_path : c.out;
  if (path.empty()) invalid("export needs --out or --export");
  if (!c.export_path.empty() && !c.out.empty()) invalid("give only one of --out and --export");
  ctx.files.reserve(path, c.export_path.empty() ? "--out" : "--export");
  const SampledMesh m = sample_mesh(make_patch(spec), nu, nv);
  ctx.files.add(path, obj_text(m.mesh));
  const MeshTopology top = topology(m.mesh);
  ctx.out << spec.kind() << ": " << top.vertices << " vertices, " << top.faces << " triangles, "
          << (top.closed ? "closed" : "open") << ", chi = " << top.euler_characteristic() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted-area stationary surfaces: verification, generation and flow", "stationary"};
  app.require_subcommand(1, 1);

  Common common;
  int samples = 16;
  double fourier_u = 0;
  int n_max = 4, fourier_nv = 64;
  std::string csv_path, direction = "forward";
  FlowArgs flow;

  auto add_common = [&](CLI::App* cmd, bool alpha, bool grid, bool outputs) {
    add_family_options(cmd, common.family);
    if (alpha) cmd->add_option("--alpha", common.alpha, "weight exponent");
    if (grid) cmd->add_option("--grid", common.grid, "sample grid NxM");
    cmd->add_option("--out", common.out, "output file");
    if (outputs) cmd->add_option("--export", common.export_path, "OBJ mesh output");
  };

  auto* verify = app.add_subcommand("verify", "residual of the Euler-Lagrange equation on a grid");
  add_common(verify, true, true, false);
  auto* energy_cmd = app.add_subcommand("energy", "weighted area by quadrature");
  add_common(energy_cmd, true, true, false);
  auto* coeffs = app.add_subcommand("coeffs", "ruled polynomial or cylinder coefficients");
  add_common(coeffs, true, false, false);
  coeffs->add_option("--samples", samples, "number of stations");
  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients of the weighted defect");
  add_common(fourier, true, false, false);
  fourier->add_option("--at", fourier_u, "u station")->required();
  fourier->add_option("--nmax", n_max, "highest harmonic kept");
  fourier->add_option("--nv", fourier_nv, "samples around the circle (power of two)");
  auto* generate = app.add_subcommand("generate", "integrate an ODE family and tabulate it");
  add_common(generate, false, true, true);
  generate->add_option("--csv", csv_path, "solution table u,a,r,kappa");
  auto* invert = app.add_subcommand("invert", "image under p -> p/|p|^2");
  add_common(invert, true, true, true);
  auto* shift = app.add_subcommand("verify-shift", "residuals of a surface and its inverse");
  add_common(shift, true, true, false);
  shift->add_option("--direction", direction, "forward or inverse");
  auto* flow_cmd = app.add_subcommand("flow", "gradient descent of the discrete energy");
  add_common(flow_cmd, true, false, true);
  flow_cmd->add_option("--grid", common.grid, "sample grid NxM (default 16x32)");
  flow_cmd->add_option("--mesh", flow.mesh, "closed OBJ mesh instead of a family");
  flow_cmd->add_option("--steps", flow.steps, "descent steps");
  flow_cmd->add_option("--dt", flow.dt, "step size (initial trial for backtracking)");
  flow_cmd->add_option("--rule", flow.rule, "fixed or backtracking");
  flow_cmd->add_option("--noise", flow.noise, "uniform vertex perturbation amplitude");
  flow_cmd->add_option("--seed", flow.seed, "perturbation seed");
  auto* export_cmd = app.add_subcommand("export", "OBJ triangulation of a family");
  add_common(export_cmd, false, true, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  Context ctx{out, {}};
  try {
    if (verify->parsed()) cmd_verify(common, ctx);
    if (energy_cmd->parsed()) cmd_energy(common, ctx);
    if (coeffs->parsed()) cmd_coeffs(common, samples, ctx);
    if (fourier->parsed()) cmd_fourier(common, fourier_u, n_max, fourier_nv, ctx);
    if (generate->parsed()) cmd_generate(common, csv_path, ctx);
    if (invert->parsed()) cmd_invert(common, ctx);
    if (shift->parsed()) cmd_verify_shift(common, direction, ctx);
    if (flow_cmd->parsed()) {
      if (flow_cmd->count("--grid") == 0) common.grid = "16x32";
      cmd_flow(common, flow, ctx);
    }
    if (export_cmd->parsed()) cmd_export(common, ctx);
    ctx.files.commit();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.kind()) ? kExitNumerical : kExitValidation;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace stationary::cli
