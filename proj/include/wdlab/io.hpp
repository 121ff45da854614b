#pragma once

// Model-file and report serialization. Model files are canonical JSON: fixed
// key order, rationals as "num/den" strings in lowest terms, cup entries
// sorted with zero rows omitted. serialize o parse is the identity on
// canonical files.

#include <json.hpp>

#include "wdlab/frobenius.hpp"
#include "wdlab/models.hpp"
#include "wdlab/spectral.hpp"

namespace wdlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

std::string serialize_model(const ModelBundle& b);

/// Throws ParseError for syntax/schema problems; ActionError/ModelError
/// surface when an embedded action violates its construction invariants.
ModelBundle parse_model(const std::string& text);

ModelBundle load_model_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// FNV-1a 64-bit, hex; used to stamp reports with their input.
std::string content_hash(const std::string& bytes);

/// ISO-8601 UTC "now"; reports carry it, determinism tests strip it.
std::string timestamp_utc();

Json json_rat(const Rational& r);
Json json_rat_vector(const RatVector& v);
Json json_rat_matrix(const RatMatrix& m);

Json validation_report_json(const ValidationReport& rep);
Json norm_table_json(const NormTable& t);
Json spectral_report_json(const SpectralReport& rep);
Json weil_rows_json(const std::vector<WeilRow>& rows);
Json eq2_sweep_json(const Eq2Sweep& sweep);
Json lemma1_audit_json(const Lemma1Audit& audit);
Json trace_radius_json(const TraceRadiusReport& rep);
/// mode_mask: bit 0 = entrywise, bit 1 = conjugate-transpose.
Json theorem1_json(const Theorem1Report& rep, int mode_mask = 3);
Json fractional_power_json(const FractionalPower& fp);

/// Common report envelope; sections are appended by the caller.
Json report_envelope(const std::string& command, const std::string& input_path,
                     const std::string& input_bytes);

}  // namespace wdlab
