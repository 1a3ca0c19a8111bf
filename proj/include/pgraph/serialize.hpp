#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pgraph/oracle.hpp"
#include "pgraph/spectrum.hpp"

namespace pgraph {

// Spectrum wire format: JSON object {"eigenvalue": multiplicity, ...} with
// eigenvalues as decimal strings (ordered ascending by nlohmann's ordered
// map). Multiplicities are emitted as numbers when they fit 64 bits and as
// decimal strings otherwise; the parser accepts both.
nlohmann::ordered_json spectrum_to_json(const FactoredSpectrum& s);
FactoredSpectrum spectrum_from_json(const nlohmann::ordered_json& j);

// Compact single-cell form for CSV: "0^1;8^7", ascending.
std::string spectrum_to_csv_cell(const FactoredSpectrum& s);
FactoredSpectrum spectrum_from_csv_cell(std::string_view cell);

// Superscript multiset notation \{0^{1}, 8^{7}\} for latex-table output.
std::string spectrum_to_latex(const FactoredSpectrum& s);

// Polynomial wire format: coefficient list, constant term first, decimal
// strings.
nlohmann::ordered_json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json report_to_json(const VerificationReport& rep, bool include_timing);

}  // namespace pgraph
