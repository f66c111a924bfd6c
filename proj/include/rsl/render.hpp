#pragma once

#include <string>

#include "json.hpp"
#include "rsl/parking.hpp"
#include "rsl/qt_poly.hpp"
#include "rsl/schur_expand.hpp"
#include "rsl/verify.hpp"

namespace rsl {

// JSON renderings; every emitter is byte-deterministic for fixed input.
nlohmann::json poly_json(const QTPoly& p);
nlohmann::json path_json(const DyckPath& p);
nlohmann::json pf_json(const ParkingFunction& pf);
nlohmann::json expansion_json(const SchurExpansion& e, bool with_qt_schur);
nlohmann::json report_json(const VerifyReport& r);

std::string two_row_str(const TwoRow& tr);
std::string two_row_latex(const TwoRow& tr);

// text rendering of one coefficient decomposition: "s~(3) + s~(1,1)"
std::string decomposition_str(const std::vector<std::pair<TwoRow, long>>& dec);

std::string expansion_text(const SchurExpansion& e);
std::string expansion_csv(const SchurExpansion& e);
std::string expansion_latex(const SchurExpansion& e);

// Table of (q,t)-Schur decompositions for one {3k, 3k+1, 3k+2} family,
// one row per k, one column per partition of 3.
std::string family_table_latex(const std::string& family, int kmax);
nlohmann::json family_table_json(const std::string& family, int kmax);

std::string report_text(const VerifyReport& r);

}  // namespace rsl
