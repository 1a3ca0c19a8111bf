#include "pgraph/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace pgraph {

using nlohmann::ordered_json;

namespace {

Bigint bigint_from_json(const ordered_json& v) {
    if (v.is_string()) return Bigint(v.get<std::string>());
    if (v.is_number_unsigned()) return Bigint(v.get<unsigned long long>());
    if (v.is_number_integer()) return Bigint(v.get<long long>());
    throw std::invalid_argument("expected a decimal string or an integer");
}

ordered_json multiplicity_to_json(const Bigint& m) {
    if (m.fits_u64()) return ordered_json(m.to_u64());
    return ordered_json(m.to_string());
}

}  // namespace

ordered_json spectrum_to_json(const FactoredSpectrum& s) {
    ordered_json j = ordered_json::object();
    for (const auto& [ev, mult] : s.roots()) j[ev.to_string()] = multiplicity_to_json(mult);
    return j;
}

FactoredSpectrum spectrum_from_json(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("spectrum JSON must be an object");
    FactoredSpectrum s;
    for (const auto& [key, value] : j.items()) s.add(Bigint(key), bigint_from_json(value));
    return s;
}

std::string spectrum_to_csv_cell(const FactoredSpectrum& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [ev, mult] : s.roots()) {
        if (!first) os << ';';
        first = false;
        os << ev.to_string() << '^' << mult.to_string();
    }
    return os.str();
}

FactoredSpectrum spectrum_from_csv_cell(std::string_view cell) {
    FactoredSpectrum s;
    std::size_t pos = 0;
    while (pos < cell.size()) {
        std::size_t sep = cell.find(';', pos);
        std::string_view item =
            cell.substr(pos, sep == std::string_view::npos ? std::string_view::npos : sep - pos);
        std::size_t caret = item.find('^');
        if (caret == std::string_view::npos)
            throw std::invalid_argument("spectrum cell item lacks '^'");
        s.add(Bigint(item.substr(0, caret)), Bigint(item.substr(caret + 1)));
        if (sep == std::string_view::npos) break;
        pos = sep + 1;
    }
    return s;
}

std::string spectrum_to_latex(const FactoredSpectrum& s) {
    std::ostringstream os;
    os << "\\{";
    bool first = true;
    for (const auto& [ev, mult] : s.roots()) {
        if (!first) os << ", ";
        first = false;
        os << ev.to_string() << "^{" << mult.to_string() << '}';
    }
    os << "\\}";
    return os.str();
}

ordered_json polynomial_to_json(const IntPolynomial& p) {
    ordered_json j = ordered_json::array();
    for (const Bigint& c : p.coeffs()) j.push_back(c.to_string());
    return j;
}

IntPolynomial polynomial_from_json(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Bigint> coeffs;
    coeffs.reserve(j.size());
    for (const auto& v : j) coeffs.push_back(bigint_from_json(v));
    return IntPolynomial(std::move(coeffs));
}

ordered_json report_to_json(const VerificationReport& rep, bool include_timing) {
    ordered_json j;
    j["group"] = rep.descriptor;
    j["order"] = rep.order.to_string();
    j["pass"] = rep.pass;
    ordered_json spectra = ordered_json::object();
    for (const auto& [name, spec] : rep.spectra) spectra[name] = spectrum_to_json(spec);
    j["spectra"] = spectra;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    if (!rep.skipped.empty()) j["skipped"] = rep.skipped;
    if (include_timing) j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

}  // namespace pgraph
