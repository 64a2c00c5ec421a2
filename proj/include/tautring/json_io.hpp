#ifndef TAUTRING_JSON_IO_HPP
#define TAUTRING_JSON_IO_HPP

// JSON wire forms. Rationals and multi-indices are written as their
// canonical strings; key order is fixed.

#include "tautring/identities.hpp"
#include "tautring/matrix.hpp"

#include "json.hpp"

#include <string>
#include <variant>

namespace tautring {

using Json = nlohmann::ordered_json;

/// {"g","k","rows","cols","entries","rank"}; rank is null when not computed.
inline Json to_json(const FaberMatrix &fm) {
  Json j;
  j["g"] = fm.g;
  j["k"] = fm.k;
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (const auto &r : fm.rows)
    rows.push_back(r.to_string());
  for (const auto &c : fm.cols)
    cols.push_back(c.to_string());
  for (const auto &row : fm.entries) {
    Json line = Json::array();
    for (const auto &x : row)
      line.push_back(to_string(x));
    entries.push_back(std::move(line));
  }
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  j["entries"] = std::move(entries);
  j["rank"] = fm.rank ? Json(*fm.rank) : Json(nullptr);
  return j;
}

/// {"id","params","lhs","rhs","pass"}
inline Json to_json(const CheckResult &c) {
  Json params = Json::array();
  for (const auto &p : c.params)
    std::visit([&](const auto &v) { params.push_back(v); }, p);
  Json j;
  j["id"] = c.id;
  j["params"] = std::move(params);
  j["lhs"] = to_string(c.lhs);
  j["rhs"] = to_string(c.rhs);
  j["pass"] = c.pass;
  return j;
}

inline Json to_json(const PositivityReport &r) {
  Json j;
  j["id"] = "positivity";
  j["params"] = Json::array({r.deg_max, r.g_max});
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["report_only"] = true;
  return j;
}

inline Json to_json(const ATableRow &row) {
  Json j;
  j["s"] = row.s;
  j["k"] = row.k;
  j["g"] = row.g;
  j["a"] = row.a;
  j["published"] = row.published ? Json(*row.published) : Json(nullptr);
  j["f"] = row.guess_f;
  j["matches_published"] = row.matches_published();
  j["matches_f"] = row.matches_guess();
  return j;
}

} // namespace tautring

#endif // TAUTRING_JSON_IO_HPP
