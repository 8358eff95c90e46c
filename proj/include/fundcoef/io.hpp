#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "fundcoef/analysis.hpp"
#include "fundcoef/bqf.hpp"
#include "fundcoef/half_integral_form.hpp"
#include "fundcoef/jacobi.hpp"
#include "fundcoef/siegel.hpp"

// JSON table formats. Key order is fixed (ordered_json) so that output is
// byte-identical for identical inputs; rationals are "num/den" strings.
namespace fundcoef::io {

using Json = nlohmann::ordered_json;

Json to_json(const jacobi::JacobiCoeffs& phi);
// Every reduced form with |disc| < prec_disc, zeros included, ordered by
// |disc| and then by reduced_forms order.
Json to_json(const siegel::SiegelForm& f);
Json to_json(const HalfIntegralForm& f);
Json to_json(const bqf::ClassGroup& g);
Json to_json(const analysis::ScanReport& r);

// One line per hit: d,witness,value (witness forms as "a b c").
std::string to_csv(const analysis::ScanReport& r);

jacobi::JacobiCoeffs jacobi_from_json(const Json& j);
siegel::SiegelForm siegel_from_json(const Json& j);
HalfIntegralForm half_from_json(const Json& j);

using Table = std::variant<jacobi::JacobiCoeffs, siegel::SiegelForm, HalfIntegralForm>;

// Dispatches on the "type" field. ParseError for malformed JSON or
// unknown types, InvariantError when a table breaks its type's invariants.
Table table_from_json(const Json& j);
Table load_table(const std::string& path);

// Compact JSON plus trailing newline.
std::string dump(const Json& j);
void write_file(const std::string& path, const std::string& contents);

} // namespace fundcoef::io
