#pragma once

#include "dgreen/verify.hpp"

#include "json.hpp"

#include <string>

namespace dgreen {

using Json = nlohmann::json;

enum class Format { Json, Tsv, Latex };

/// "json", "tsv" or "latex"; throws ParseError.
Format parse_format(const std::string& text);
std::string format_name(Format f);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

// Polynomials and rational functions are strings: "q^5+q^4", "(q^2-1)/(q^3-1)".
Json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const Json& j);
Json to_json(const RatFunc& f);
RatFunc rat_func_from_json(const Json& j);

Json to_json(CharLabel l);
CharLabel label_from_json(const Json& j, int m);

/// {"m", "classes": [[labels] bottom first], "a": [...]}
Json to_json(const LSDatum& d);
LSDatum datum_from_json(const Json& j);

/// Nonzero entries as {row: {col: value}}.
Json matrix_to_json(const std::vector<CharLabel>& rows, const std::vector<CharLabel>& cols, const PolyMatrix& a);
PolyMatrix matrix_from_json(const Json& j, const std::vector<CharLabel>& rows, const std::vector<CharLabel>& cols,
                            int m);

Json to_json(const OmegaMatrix& om);
OmegaMatrix omega_from_json(const Json& j);

Json to_json(const GreenSystem& sys);
GreenSystem system_from_json(const Json& j);

Json to_json(const SpringerSet& s);
Json to_json(const ClosureOrder& order, const LSDatum& d, const SpringerSet& s);
Json to_json(const ConditionReport& r);
Json to_json(const SmoothnessCertificate& c);
/// With certificates, the special pieces and their smoothness entries too.
Json to_json(const Correspondence& c, const SpringerSet& s, bool certificates = false);
Json to_json(const SearchResult& r, bool certificates = false);
Json to_json(const MaximalResult& r, const SpringerSet& s, bool certificates = false);
Json to_json(const SprefResult& r);
Json to_json(const DFormulaCheck& c);
Json to_json(const SprefInductionCheck& c);
Json to_json(const AtlasFixture& f, const AtlasReport& r);
Json to_json(const VerifyReport& r);
/// Characters of I2(m) with degree, b and fake degree.
Json irr_to_json(int m);

// Tab-separated output, one header line.
std::string tsv_matrix(const std::vector<CharLabel>& labels, const PolyMatrix& a);
std::string tsv_irr(int m);
std::string tsv_datum(const LSDatum& d);
std::string tsv_search(const SearchResult& r);
std::string tsv_verify(const VerifyReport& r);

// LaTeX.
std::string latex_label(int m, CharLabel l);
std::string latex_poly(const RatFunc& f);
std::string latex_matrix(int m, const std::vector<CharLabel>& labels, const PolyMatrix& a);
/// class | reps. table in the style of the unipotent class tables.
std::string latex_correspondence_table(const LSDatum& d, const SpringerSet& s);
/// xymatrix Hasse diagram of the closure order, top class first.
std::string latex_closure(const LSDatum& d, const ClosureOrder& order, const SpringerSet& s);
std::string latex_irr(int m);

}  // namespace dgreen
