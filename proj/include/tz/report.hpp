#pragma once

// JSON and CSV views of count results. Schema "tz/1".

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tz/counts.hpp"

namespace tz {

inline constexpr const char* kSchema = "tz/1";

/// "verified" when a closed-form value exists and matches, "mismatch" when
/// it exists and differs, "unverified" when there is none.
inline std::string reference_status(const CountReport& r) {
  const auto ref = known_value(r.degree, static_cast<int>(r.edges.size()));
  if (!ref) return "unverified";
  if (r.total_complex != *ref) return "mismatch";
  if (r.total_real && *r.total_real > r.total_complex) return "mismatch";
  return "verified";
}

inline nlohmann::ordered_json point_json(LatticePoint p) { return nlohmann::ordered_json::array({p.x, p.y}); }

/// With `per_path`, each selection also carries its path and the two side
/// multiplicities.
inline nlohmann::ordered_json to_json(const CountReport& r, bool per_path = false) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["degree"] = r.degree;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (auto e : r.edges) edges.push_back(std::string(1, edge_letter(e)));
  j["total_complex"] = r.total_complex;
  if (r.total_real) j["total_real"] = *r.total_real;
  if (r.sign_sequence) j["sign_sequence"] = to_string(*r.sign_sequence);
  const auto ref = known_value(r.degree, static_cast<int>(r.edges.size()));
  j["reference_value"] = ref ? nlohmann::ordered_json(*ref) : nlohmann::ordered_json(nullptr);
  j["status"] = reference_status(r);

  auto& sel = j["selections"] = nlohmann::ordered_json::array();
  for (const auto& s : r.per_selection) {
    nlohmann::ordered_json row;
    auto& marked = row["marked"] = nlohmann::ordered_json::array();
    for (const auto& m : s.marked) marked.push_back(point_json(m.point));
    row["mu"] = s.mu;
    if (s.mu_real) row["mu_real"] = *s.mu_real;
    if (per_path) {
      const auto path = build_maximal_path(MarkedConfig(r.degree, s.marked));
      auto& pts = row["path"] = nlohmann::ordered_json::array();
      for (auto p : path.points()) pts.push_back(point_json(p));
      row["mu_plus"] = mu_side(path, Side::Plus).value;
      row["mu_minus"] = mu_side(path, Side::Minus).value;
    }
    sel.push_back(std::move(row));
  }
  return j;
}

struct VerifyRow {
  int degree = 0;
  std::int64_t complex_one = 0;
  std::int64_t expected_one = 0;
  std::int64_t complex_two = 0;
  std::int64_t expected_two = 0;
  std::int64_t real_two = 0;
  bool maximal = false;

  bool ok() const noexcept {
    return complex_one == expected_one && complex_two == expected_two && real_two == complex_two &&
           maximal;
  }
};

inline VerifyRow verify_row(int d) {
  VerifyRow row;
  row.degree = d;
  row.complex_one = complex_count(d, {BoundaryEdge::Hypotenuse}).total_complex;
  row.expected_one = *known_value(d, 1);
  const auto max = maximality_report(d);
  row.complex_two = max.complex.total_complex;
  row.expected_two = *known_value(d, 2);
  row.real_two = max.real.total_real.value_or(-1);
  row.maximal = max.maximal && max.every_selection_four;
  return row;
}

inline constexpr const char* kVerifyHeader =
    "d,n_complex_1,expected_1,n_complex_2,expected_2,n_real_2,maximal";

inline std::string to_csv(const VerifyRow& r) {
  std::ostringstream os;
  os << r.degree << ',' << r.complex_one << ',' << r.expected_one << ',' << r.complex_two << ','
     << r.expected_two << ',' << r.real_two << ',' << (r.maximal ? "yes" : "no");
  return os.str();
}

}  // namespace tz
