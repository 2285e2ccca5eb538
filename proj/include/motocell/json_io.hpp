#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "motocell/arrangement.hpp"
#include "motocell/cells.hpp"
#include "motocell/completion.hpp"
#include "motocell/error.hpp"
#include "motocell/stratification.hpp"
#include "motocell/tate_polynomial.hpp"

namespace motocell {

// Field order is part of the file formats, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

// ---- cells -----------------------------------------------------------

// Cells as {p, w, mult} records sorted by (w, p); this ordering is the
// canonical one everywhere (text output, JSON, tests).
inline Json inventory_to_json(const CellInventory& inv) {
  Json cells = Json::array();
  for (const auto& [d, m] : inv.cells())
    cells.push_back(Json{{"p", d.p}, {"w", d.w}, {"mult", m}});
  return Json{{"pointing", std::string(pointing_name(inv.pointing()))},
              {"cells", std::move(cells)}};
}

inline Json poly_to_json(const SignedTatePolynomial& poly) {
  Json out = Json::object();
  for (const auto& [w, c] : poly.coeffs()) out[std::to_string(w)] = c;
  return out;
}

inline std::string inventory_to_text(const CellInventory& inv) {
  std::string out = "[";
  bool first = true;
  for (const auto& [d, m] : inv.cells()) {
    for (std::int64_t i = 0; i < m; ++i) {
      if (!first) out += ",";
      first = false;
      out += "(" + std::to_string(d.p) + "," + std::to_string(d.w) + ")";
    }
  }
  return out + "]";
}

// ---- stratifications ---------------------------------------------------

inline Json stratification_to_json(const Stratification& f) {
  Json strata = Json::array();
  for (const Stratum& s : f.strata)
    strata.push_back(Json{{"label", s.label},
                          {"affine_rank", s.affine_rank},
                          {"torus_rank", s.torus_rank},
                          {"codim", s.codim},
                          {"atacc", s.atacc}});
  return Json{{"total_dim", f.total_dim}, {"strata", std::move(strata)}};
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::parse_error, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer())
    fail(Errc::parse_error, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline Stratification stratification_from_json(const Json& j) {
  Stratification f;
  f.total_dim = detail::int_field(j, "total_dim");
  const Json& strata = detail::field(j, "strata");
  if (!strata.is_array())
    fail(Errc::parse_error, "field 'strata' must be an array");
  for (const Json& s : strata) {
    Stratum st;
    const Json& label = detail::field(s, "label");
    if (!label.is_string())
      fail(Errc::parse_error, "stratum label must be a string");
    st.label = label.get<std::string>();
    st.affine_rank = detail::int_field(s, "affine_rank");
    st.torus_rank = detail::int_field(s, "torus_rank");
    st.codim = detail::int_field(s, "codim");
    const Json& atacc = detail::field(s, "atacc");
    if (!atacc.is_boolean())
      fail(Errc::parse_error, "stratum atacc must be a boolean");
    st.atacc = atacc.get<bool>();
    f.strata.push_back(std::move(st));
  }
  return f;
}

// ---- arrangements ------------------------------------------------------

inline Json arrangement_to_json(const Arrangement& arr) {
  Json subspaces = Json::array();
  for (const Subspace& s : arr.subspaces) {
    Json offset = Json::array();
    for (const Rational& r : s.offset()) offset.push_back(format_rational(r));
    Json basis = Json::array();
    for (const RatVec& row : s.basis()) {
      Json jrow = Json::array();
      for (const Rational& r : row) jrow.push_back(format_rational(r));
      basis.push_back(std::move(jrow));
    }
    subspaces.push_back(
        Json{{"offset", std::move(offset)}, {"basis", std::move(basis)}});
  }
  return Json{{"ambient_dim", arr.ambient_dim},
              {"subspaces", std::move(subspaces)}};
}

inline Arrangement arrangement_from_json(const Json& j) {
  Arrangement arr;
  arr.ambient_dim = detail::int_field(j, "ambient_dim");
  const Json& subspaces = detail::field(j, "subspaces");
  if (!subspaces.is_array())
    fail(Errc::parse_error, "field 'subspaces' must be an array");
  auto rational_vec = [](const Json& v) {
    if (!v.is_array()) fail(Errc::parse_error, "expected an array of rationals");
    RatVec out;
    for (const Json& x : v) {
      if (!x.is_string())
        fail(Errc::parse_error, "rationals are written as strings 'a/b'");
      out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
  };
  for (const Json& s : subspaces) {
    RatVec offset = rational_vec(detail::field(s, "offset"));
    const Json& basis_json = detail::field(s, "basis");
    if (!basis_json.is_array())
      fail(Errc::parse_error, "field 'basis' must be an array of vectors");
    RatMatrix basis;
    for (const Json& row : basis_json) basis.push_back(rational_vec(row));
    arr.subspaces.emplace_back(arr.ambient_dim, std::move(offset),
                               std::move(basis), /*strict=*/true);
  }
  return arr;
}

// ---- registry records ---------------------------------------------------

inline Json flag_spec_to_json(const FlagSpec& spec) {
  Json nodes = Json::array();
  for (int k : spec.parabolic_nodes) nodes.push_back(k);
  return Json{{"family", std::string(1, static_cast<char>(spec.datum.family))},
              {"rank", spec.datum.rank},
              {"parabolic_nodes", std::move(nodes)}};
}

inline Json record_to_json(const RegistryRecord& rec) {
  if (const auto* two = std::get_if<TwoOrbitRecord>(&rec)) {
    Json out{{"name", two->name},
             {"dim_X", two->dim_x},
             {"ambient", flag_spec_to_json(two->ambient)},
             {"boundary", flag_spec_to_json(two->boundary)},
             {"codim", two->codim}};
    if (two->expected_stable_cells)
      out["expected_stable_cells"] = inventory_to_json(*two->expected_stable_cells);
    return out;
  }
  const auto& sphere = std::get<SphereRecord>(rec);
  return Json{{"name", sphere.name},
              {"dim", sphere.dim},
              {"inventory", inventory_to_json(sphere.inventory)}};
}

// ---- canonical bytes and files ------------------------------------------

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace motocell
