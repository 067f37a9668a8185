#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stationary/catalog.hpp"
#include "stationary/cyclic.hpp"
#include "stationary/flow.hpp"
#include "stationary/stationary.hpp"

namespace stationary {

using Json = nlohmann::json;

// Residual reports. CSV header: u,v,x,y,z,H,rhs,residual
void write_csv(std::ostream& out, const ResidualReport& report);
Json to_json(const ResidualReport& report);
ResidualReport report_from_json(const Json& j);

Json to_json(const FourierCoeffs& coeffs);

// Family specs. Malformed input throws kSpecValidation naming the field.
Json to_json(const ScalarFunction& fn);
ScalarFunction function_from_json(const Json& j, const std::string& field);
Json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);

// Ruled coefficient tables: s,A0,A1,A2,A3,A4
struct CoeffRow {
  double s;
  std::array<double, 5> A;
};
void write_csv(std::ostream& out, const std::vector<CoeffRow>& rows);

// Generated family solution curves: u,a,r,kappa
void write_csv(std::ostream& out, const std::vector<Neg2Sample>& solution);

// Descent traces: step,energy,grad_max,dt
void write_csv(std::ostream& out, const std::vector<TraceRow>& trace);

// ASCII OBJ with v/f records and 1-based indices.
void write_obj(std::ostream& out, const TriMesh& mesh);
TriMesh read_obj(std::istream& in);

/// Shortest round-trip decimal form, used by every text writer.
std::string format_number(double x);

}  // namespace stationary
