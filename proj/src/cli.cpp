#include "pgraph/cli.hpp"

#include <cstdlib>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgraph/closed_form.hpp"
#include "pgraph/descriptor.hpp"
#include "pgraph/graph_expr.hpp"
#include "pgraph/numutil.hpp"
#include "pgraph/oracle.hpp"
#include "pgraph/serialize.hpp"

namespace pgraph {

namespace {

using nlohmann::ordered_json;
using u64 = std::uint64_t;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<u64> parse_u64_list(const std::string& text, std::size_t expected,
                                const char* what) {
    std::vector<u64> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": expected comma-separated integers, got '" +
                             text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.size() != expected)
        throw UsageError(std::string(what) + ": expected " + std::to_string(expected) +
                         " comma-separated integers, got '" + text + "'");
    return values;
}

ZpmnParams parse_pmn(const std::string& text) {
    auto v = parse_u64_list(text, 3, "--pmn");
    if (v[1] > 64 || v[2] > 64) throw UsageError("--pmn: m and n must be at most 64");
    try {
        return ZpmnParams::make(v[0], static_cast<unsigned>(v[1]), static_cast<unsigned>(v[2]));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--pmn: ") + e.what());
    }
}

struct RsParams {
    unsigned r;
    unsigned s;
};

RsParams parse_rs(const std::string& text) {
    auto v = parse_u64_list(text, 2, "--rs");
    if (v[0] > 64 || v[1] > 64) throw UsageError("--rs: r and s must be at most 64");
    if (v[1] < 1) throw UsageError("--rs: s must be >= 1");
    return RsParams{static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1])};
}

// whole-string unsigned parse; stoull alone would accept trailing garbage
u64 parse_u64_strict(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
}

struct Range {
    u64 lo;
    u64 hi;
};

// "p=2..5" or "p=3"
Range parse_range(const std::string& item, const std::string& key) {
    std::string prefix = key + "=";
    if (item.rfind(prefix, 0) != 0)
        throw UsageError("grid: expected '" + key + "=<lo>..<hi>', got '" + item + "'");
    std::string body = item.substr(prefix.size());
    std::size_t dots = body.find("..");
    try {
        if (dots == std::string::npos) {
            u64 v = parse_u64_strict(body);
            return {v, v};
        }
        u64 lo = parse_u64_strict(body.substr(0, dots));
        u64 hi = parse_u64_strict(body.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("grid: malformed range '" + item + "'");
    }
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> items;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        items.push_back(text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return items;
}

Caps caps_from_env() {
    Caps caps;
    if (const char* v = std::getenv("ENUM_CAP")) {
        try {
            caps.enum_cap = parse_u64_strict(v);
        } catch (const std::exception&) {
            throw UsageError("ENUM_CAP: not an integer");
        }
    }
    if (const char* v = std::getenv("ORACLE_CAP")) {
        try {
            caps.oracle_cap = parse_u64_strict(v);
        } catch (const std::exception&) {
            throw UsageError("ORACLE_CAP: not an integer");
        }
    }
    return caps;
}

enum class Format { Json, Csv, LatexTable, Plain };

// quotes a CSV field when it contains a delimiter, per RFC 4180
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "latex-table") return Format::LatexTable;
    if (name == "plain") return Format::Plain;
    throw UsageError("unknown format '" + name + "'");
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumResult {
    std::string group;       // descriptor, when known
    std::string params;      // "p=2,m=2,n=2" / "r=1,s=1" when applicable
    std::string path;        // which engine produced it
    FactoredSpectrum spectrum;
    std::vector<EigenvalueTerm> dropped;  // zero-multiplicity factors
};

std::vector<EigenvalueTerm> dropped_terms(const std::vector<EigenvalueTerm>& terms) {
    std::vector<EigenvalueTerm> out;
    for (const auto& t : terms)
        if (t.multiplicity.is_zero()) out.push_back(t);
    return out;
}

SpectrumResult spectrum_for_pmn(const ZpmnParams& params) {
    SpectrumResult res;
    std::ostringstream ps;
    ps << "p=" << params.p << ",m=" << params.m << ",n=" << params.n;
    res.params = ps.str();
    if (Bigint::pow(Bigint(params.p), params.m) <= Bigint(1000000ull)) {
        std::vector<u64> factors(
            params.n, pow_u64_checked(params.p, params.m));
        res.group = format_group_descriptor(GroupSpec::make(std::move(factors)));
    }
    res.path = "closed_form_zpmn";
    res.spectrum = laplacian_spectrum_zpmn(params);
    res.dropped = dropped_terms(zpmn_terms(params));
    return res;
}

SpectrumResult spectrum_for_rs(const RsParams& rs) {
    SpectrumResult res;
    std::ostringstream ps;
    ps << "r=" << rs.r << ",s=" << rs.s;
    res.params = ps.str();
    std::vector<u64> factors(rs.r, 2);
    factors.insert(factors.end(), rs.s, 4);
    res.group = format_group_descriptor(GroupSpec::make(std::move(factors)));
    res.path = "closed_form_z2r4s";
    res.spectrum = laplacian_spectrum_z2r4s(rs.r, rs.s);
    res.dropped = dropped_terms(z2r4s_terms(rs.r, rs.s));
    return res;
}

SpectrumResult spectrum_for_group(const GroupSpec& g, const Caps& caps) {
    SpectrumResult res;
    res.group = format_group_descriptor(g);
    if (auto zpmn = as_homocyclic_prime_power(g)) {
        ZpmnParams params = ZpmnParams::make(zpmn->p, zpmn->m, zpmn->n);
        res.path = "closed_form_zpmn";
        res.spectrum = laplacian_spectrum_zpmn(params);
        res.dropped = dropped_terms(zpmn_terms(params));
        return res;
    }
    if (auto tf = as_two_four(g)) {
        res.path = "closed_form_z2r4s";
        res.spectrum = laplacian_spectrum_z2r4s(tf->r, tf->s);
        res.dropped = dropped_terms(z2r4s_terms(tf->r, tf->s));
        return res;
    }
    if (g.order() <= Bigint(static_cast<unsigned long long>(
                         std::min(caps.enum_cap, caps.oracle_cap)))) {
        res.path = "oracle";
        res.spectrum = brute_spectrum(g, caps.oracle_cap, caps.enum_cap);
        return res;
    }
    throw UsageError("no spectrum path applies: '" + res.group +
                     "' is outside both closed-form families and beyond the oracle cap");
}

Bigint edge_count_of(const FactoredSpectrum& s) { return s.trace().divexact(2); }

void emit_spectrum(const SpectrumResult& res, Format format, std::ostream& out) {
    Bigint vertices = res.spectrum.total_multiplicity();
    Bigint edges = edge_count_of(res.spectrum);
    switch (format) {
        case Format::Json: {
            ordered_json j;
            if (!res.group.empty()) j["group"] = res.group;
            if (!res.params.empty()) j["params"] = res.params;
            j["path"] = res.path;
            j["vertices"] = vertices.to_string();
            j["edges"] = edges.to_string();
            j["spectrum"] = spectrum_to_json(res.spectrum);
            ordered_json dropped = ordered_json::array();
            for (const auto& t : res.dropped) {
                ordered_json tj;
                tj["factor"] = t.provenance;
                tj["eigenvalue"] = t.eigenvalue.to_string();
                dropped.push_back(tj);
            }
            j["dropped_factors"] = dropped;
            out << j.dump(2) << '\n';
            return;
        }
        case Format::Csv: {
            out << "group,params,path,vertices,edges,spectrum\n";
            out << csv_field(res.group) << ',' << csv_field(res.params) << ',' << res.path
                << ',' << vertices.to_string() << ',' << edges.to_string() << ','
                << spectrum_to_csv_cell(res.spectrum) << '\n';
            return;
        }
        case Format::LatexTable: {
            out << (res.group.empty() ? res.params : res.group) << " & "
                << vertices.to_string() << " & " << edges.to_string() << " & $"
                << spectrum_to_latex(res.spectrum) << "$ \\\\\n";
            return;
        }
        case Format::Plain: {
            if (!res.group.empty()) out << "group: " << res.group << '\n';
            if (!res.params.empty()) out << "params: " << res.params << '\n';
            out << "path: " << res.path << '\n';
            out << "vertices: " << vertices.to_string() << '\n';
            out << "edges: " << edges.to_string() << '\n';
            out << "spectrum: " << res.spectrum.to_string() << '\n';
            for (const auto& t : res.dropped)
                out << "dropped: " << t.provenance << " [eigenvalue "
                    << t.eigenvalue.to_string() << "]\n";
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// verify

// one item of a grid bound list: "p<=5" or "ordercap=300"
std::pair<std::string, u64> parse_bound(const std::string& item, const char* flag) {
    std::size_t le = item.find("<=");
    std::size_t eq = le == std::string::npos ? item.find('=') : le;
    std::size_t skip = le == std::string::npos ? 1 : 2;
    if (eq == std::string::npos || eq == 0)
        throw UsageError(std::string(flag) + ": expected 'key<=value' or 'ordercap=value', got '" +
                         item + "'");
    try {
        return {item.substr(0, eq), parse_u64_strict(item.substr(eq + skip))};
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": malformed bound '" + item + "'");
    }
}

std::vector<GroupSpec> grid_pmn(const std::string& spec_text) {
    u64 p_max = 0, m_max = 0, n_max = 0, order_cap = kDefaultOracleCap;
    for (const std::string& item : split_commas(spec_text)) {
        auto [key, value] = parse_bound(item, "--all-pmn");
        if (key == "p") p_max = value;
        else if (key == "m") m_max = value;
        else if (key == "n") n_max = value;
        else if (key == "ordercap") order_cap = value;
        else throw UsageError("--all-pmn: unknown key '" + key + "'");
    }
    if (p_max < 2 || m_max < 1 || n_max < 1)
        throw UsageError("--all-pmn: need p<=P (P >= 2), m<=M, n<=N (M, N >= 1)");
    std::vector<GroupSpec> groups;
    for (u64 p = 2; p <= p_max; ++p) {
        if (!is_prime_u64(p)) continue;
        for (u64 m = 1; m <= m_max; ++m)
            for (u64 n = 1; n <= n_max; ++n) {
                Bigint order = Bigint::pow(Bigint(p), m * n);
                if (order > Bigint(order_cap)) continue;
                std::vector<u64> factors(static_cast<std::size_t>(n),
                                         pow_u64_checked(p, m));
                groups.push_back(GroupSpec::make(std::move(factors)));
            }
    }
    return groups;
}

std::vector<GroupSpec> grid_rs(const std::string& spec_text) {
    u64 r_max = UINT64_MAX, s_max = UINT64_MAX, order_cap = kDefaultOracleCap;
    for (const std::string& item : split_commas(spec_text)) {
        auto [key, value] = parse_bound(item, "--all-rs");
        if (key == "r") r_max = value;
        else if (key == "s") s_max = value;
        else if (key == "ordercap") order_cap = value;
        else throw UsageError("--all-rs: unknown key '" + key + "'");
    }
    std::vector<GroupSpec> groups;
    for (u64 r = 0; r <= std::min<u64>(r_max, 64); ++r)
        for (u64 s = 1; s <= std::min<u64>(s_max, 32); ++s) {
            Bigint order = Bigint::pow(Bigint(2), r + 2 * s);
            if (order > Bigint(order_cap)) continue;
            std::vector<u64> factors(static_cast<std::size_t>(r), 2);
            factors.insert(factors.end(), static_cast<std::size_t>(s), 4);
            groups.push_back(GroupSpec::make(std::move(factors)));
        }
    return groups;
}

void emit_verify_plain(const VerificationReport& rep, bool timing, std::ostream& out) {
    out << (rep.pass ? "PASS" : "FAIL") << ' ' << rep.descriptor << " (order "
        << rep.order.to_string() << ", " << rep.spectra.size() << " paths";
    if (timing) out << ", " << rep.elapsed_ms << " ms";
    out << ")\n";
    for (const auto& c : rep.checks)
        if (!c.pass)
            out << "  check failed: " << c.name
                << (c.detail.empty() ? "" : " -- " + c.detail) << '\n';
    for (const auto& s : rep.skipped) out << "  skipped: " << s << '\n';
}

int cmd_verify(const std::vector<GroupSpec>& groups, Format format, bool timing,
               const Caps& caps, std::ostream& out) {
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(groups.size());
    for (const GroupSpec& g : groups)
        futures.push_back(std::async(std::launch::async,
                                     [&caps, g]() { return verify_group(g, caps); }));
    std::vector<VerificationReport> reports;
    reports.reserve(groups.size());
    for (auto& f : futures) reports.push_back(f.get());

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    switch (format) {
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r, timing));
            ordered_json j;
            j["reports"] = arr;
            j["all_pass"] = all_pass;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            out << "group,order,pass,paths,failed_checks\n";
            for (const auto& r : reports) {
                std::size_t failed = 0;
                for (const auto& c : r.checks)
                    if (!c.pass) ++failed;
                out << csv_field(r.descriptor) << ',' << r.order.to_string() << ','
                    << (r.pass ? "true" : "false") << ',' << r.spectra.size() << ','
                    << failed << '\n';
            }
            break;
        }
        case Format::LatexTable:
        case Format::Plain: {
            for (const auto& r : reports) emit_verify_plain(r, timing, out);
            out << (all_pass ? "all PASS" : "FAILURES present") << " (" << reports.size()
                << " groups)\n";
            break;
        }
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify

struct Flag {
    // value: "yes", "no" or "n/a"
    std::string name;
    std::string value;
};

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::vector<Flag> classify_flags(const GroupSpec& g, const Caps& caps) {
    std::vector<Flag> flags;
    flags.push_back({"complete", yesno(is_power_graph_complete(g))});
    flags.push_back({"planar", yesno(is_planar_power_graph_abelian(g))});

    auto zpmn = as_homocyclic_prime_power(g);
    if (zpmn) {
        ZpmnParams params = ZpmnParams::make(zpmn->p, zpmn->m, zpmn->n);
        flags.push_back({"flower", yesno(is_flower_zpmn(params))});
    } else if (g.is_trivial()) {
        flags.push_back({"flower", "no"});
    } else {
        flags.push_back({"flower", "n/a"});
    }

    // a spectrum, if any path applies
    std::optional<FactoredSpectrum> spectrum;
    bool integral_known = false;
    bool integral = false;
    if (zpmn) {
        spectrum = laplacian_spectrum_zpmn(ZpmnParams::make(zpmn->p, zpmn->m, zpmn->n));
        integral_known = true;
        integral = true;
    } else if (auto tf = as_two_four(g)) {
        spectrum = laplacian_spectrum_z2r4s(tf->r, tf->s);
        integral_known = true;
        integral = true;
    } else if (g.is_trivial()) {
        spectrum = spectrum_of_complete(Bigint(1));
        integral_known = true;
        integral = true;
    } else if (g.order() <= Bigint(static_cast<unsigned long long>(
                                std::min(caps.enum_cap, caps.oracle_cap)))) {
        integral_known = true;
        try {
            spectrum = brute_spectrum(g, caps.oracle_cap, caps.enum_cap);
            integral = true;
        } catch (const std::domain_error&) {
            integral = false;  // non-integral spectrum signaled by the factorizer
        }
    }
    flags.push_back({"laplacian_integral", integral_known ? yesno(integral) : "n/a"});

    if (spectrum) {
        bool contained = true;
        for (u64 order : group_spectrum(g, caps.enum_cap))
            if (!spectrum->contains(Bigint(order))) contained = false;
        flags.push_back({"spectrum_containment", yesno(contained)});
    } else {
        flags.push_back({"spectrum_containment", "n/a"});
    }
    return flags;
}

void emit_classify(const std::string& descriptor, const std::vector<Flag>& flags,
                   Format format, std::ostream& out) {
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["group"] = descriptor;
            for (const auto& f : flags) {
                if (f.value == "n/a") j[f.name] = "n/a";
                else j[f.name] = (f.value == "yes");
            }
            out << j.dump(2) << '\n';
            return;
        }
        case Format::Csv: {
            out << "group";
            for (const auto& f : flags) out << ',' << f.name;
            out << '\n' << csv_field(descriptor);
            for (const auto& f : flags) out << ',' << f.value;
            out << '\n';
            return;
        }
        case Format::LatexTable:
        case Format::Plain: {
            out << "group: " << descriptor << '\n';
            for (const auto& f : flags) out << f.name << ": " << f.value << '\n';
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// counts

int cmd_counts(const RsParams& rs, Format format, const Caps& caps, std::ostream& out) {
    Bigint f_order2 = count_order2_z2r4s(rs.r, rs.s);
    Bigint f_order4 = count_order4_z2r4s(rs.r, rs.s);
    auto deg = degree_class_counts_z2r4s(rs.r, rs.s);
    Bigint order = Bigint::pow(Bigint(2), static_cast<u64>(rs.r) + 2 * rs.s);
    bool identity_ok = Bigint(1) + f_order2 + f_order4 == order;

    std::vector<u64> factors(rs.r, 2);
    factors.insert(factors.end(), rs.s, 4);
    GroupSpec g = GroupSpec::make(std::move(factors));

    bool enumerated = false;
    Bigint e_order2, e_order4, e_deg1, e_degbig;
    if (g.order() <= Bigint(static_cast<unsigned long long>(caps.enum_cap))) {
        enumerated = true;
        auto classes = order_class_counts(g, caps.enum_cap);
        e_order2 = Bigint(classes.count(2) ? classes.at(2) : 0);
        e_order4 = Bigint(classes.count(4) ? classes.at(4) : 0);
        Graph graph = build_power_graph(g, caps.enum_cap);
        for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
            if (element_order(g, graph.labels()[v]) != 2) continue;
            if (graph.degree(v) == 1) e_deg1 += Bigint(1);
            else e_degbig += Bigint(1);
        }
    }

    struct Row {
        const char* name;
        Bigint formula;
        Bigint enumeration;
    };
    std::vector<Row> rows = {
        {"order2", f_order2, e_order2},
        {"order4", f_order4, e_order4},
        {"deg1", deg.degree_one, e_deg1},
        {"degBig", deg.degree_big, e_degbig},
    };

    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["group"] = format_group_descriptor(g);
            j["r"] = rs.r;
            j["s"] = rs.s;
            j["order"] = order.to_string();
            j["identity_1_plus_n2_plus_n4_eq_order"] = identity_ok;
            for (const auto& row : rows) {
                ordered_json rj;
                rj["formula"] = row.formula.to_string();
                if (enumerated) {
                    rj["enumerated"] = row.enumeration.to_string();
                    rj["match"] = row.formula == row.enumeration;
                } else {
                    rj["enumerated"] = "n/a";
                }
                j[row.name] = rj;
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            out << "name,formula,enumerated,match\n";
            for (const auto& row : rows) {
                out << row.name << ',' << row.formula.to_string() << ',';
                if (enumerated)
                    out << row.enumeration.to_string() << ','
                        << (row.formula == row.enumeration ? "true" : "false");
                else
                    out << "n/a,n/a";
                out << '\n';
            }
            break;
        }
        case Format::LatexTable:
        case Format::Plain: {
            out << "group: " << format_group_descriptor(g) << " (order "
                << order.to_string() << ")\n";
            for (const auto& row : rows) {
                out << row.name << ": formula " << row.formula.to_string();
                if (enumerated)
                    out << ", enumerated " << row.enumeration.to_string() << ", "
                        << (row.formula == row.enumeration ? "match" : "MISMATCH");
                else
                    out << ", enumeration n/a (beyond cap)";
                out << '\n';
            }
            out << "identity 1 + order2 + order4 == order: "
                << (identity_ok ? "holds" : "VIOLATED") << '\n';
            break;
        }
    }
    bool all_match = identity_ok;
    if (enumerated)
        for (const auto& row : rows) all_match = all_match && row.formula == row.enumeration;
    return all_match ? 0 : 1;
}

// ---------------------------------------------------------------------------
// table

struct TableRow {
    std::string params;
    std::string group;
    FactoredSpectrum spectrum;
};

void emit_table(const std::vector<TableRow>& rows, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json j;
                j["params"] = row.params;
                if (!row.group.empty()) j["group"] = row.group;
                j["order"] = row.spectrum.total_multiplicity().to_string();
                j["edges"] = row.spectrum.trace().divexact(2).to_string();
                j["spectrum"] = spectrum_to_json(row.spectrum);
                arr.push_back(j);
            }
            out << arr.dump(2) << '\n';
            return;
        }
        case Format::Csv: {
            out << "params,group,order,edges,spectrum\n";
            for (const auto& row : rows)
                out << csv_field(row.params) << ',' << csv_field(row.group) << ','
                    << row.spectrum.total_multiplicity().to_string() << ','
                    << row.spectrum.trace().divexact(2).to_string() << ','
                    << spectrum_to_csv_cell(row.spectrum) << '\n';
            return;
        }
        case Format::LatexTable: {
            for (const auto& row : rows)
                out << row.params << " & " << row.spectrum.total_multiplicity().to_string()
                    << " & $" << spectrum_to_latex(row.spectrum) << "$ \\\\\n";
            return;
        }
        case Format::Plain: {
            for (const auto& row : rows)
                out << row.params << "  order " << row.spectrum.total_multiplicity().to_string()
                    << "  " << row.spectrum.to_string() << '\n';
            return;
        }
    }
}

std::vector<TableRow> table_rows_pmn_grid(const std::string& grid) {
    auto items = split_commas(grid);
    if (items.size() != 3) throw UsageError("--pmn-grid: expected 'p=..,m=..,n=..'");
    Range pr = parse_range(items[0], "p");
    Range mr = parse_range(items[1], "m");
    Range nr = parse_range(items[2], "n");
    if (mr.hi > 64 || nr.hi > 64) throw UsageError("--pmn-grid: m and n must be at most 64");
    std::vector<TableRow> rows;
    for (u64 p = pr.lo; p <= pr.hi; ++p) {
        if (!is_prime_u64(p)) continue;  // p sweeps primes only
        for (u64 m = mr.lo; m <= mr.hi; ++m)
            for (u64 n = nr.lo; n <= nr.hi; ++n) {
                auto res = spectrum_for_pmn(ZpmnParams::make(
                    p, static_cast<unsigned>(m), static_cast<unsigned>(n)));
                rows.push_back({res.params, res.group, std::move(res.spectrum)});
            }
    }
    if (rows.empty()) throw UsageError("--pmn-grid: no primes in the p range");
    return rows;
}

std::vector<TableRow> table_rows_rs_grid(const std::string& grid) {
    auto items = split_commas(grid);
    if (items.size() != 2) throw UsageError("--rs-grid: expected 'r=..,s=..'");
    Range rr = parse_range(items[0], "r");
    Range sr = parse_range(items[1], "s");
    if (sr.lo < 1) throw UsageError("--rs-grid: s must be >= 1");
    if (rr.hi > 64 || sr.hi > 64) throw UsageError("--rs-grid: r and s must be at most 64");
    std::vector<TableRow> rows;
    for (u64 r = rr.lo; r <= rr.hi; ++r)
        for (u64 s = sr.lo; s <= sr.hi; ++s) {
            auto res = spectrum_for_rs(
                RsParams{static_cast<unsigned>(r), static_cast<unsigned>(s)});
            rows.push_back({res.params, res.group, std::move(res.spectrum)});
        }
    return rows;
}

// ---------------------------------------------------------------------------

int run_cli_inner(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
    CLI::App app{"exact Laplacian spectra of power graphs of finite abelian p-groups"};
    app.require_subcommand(1);

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "Laplacian spectrum of one group");
    std::string sp_pmn, sp_rs, sp_group;
    sp->add_option("--pmn", sp_pmn, "p,m,n for Z_{p^m}^n");
    sp->add_option("--rs", sp_rs, "r,s for Z_2^r x Z_4^s");
    sp->add_option("--group", sp_group, "group descriptor, e.g. \"Z2^3 x Z4^2\"");
    std::string sp_format = "json";
    sp->add_option("--format", sp_format, "json|csv|latex-table|plain");

    // structure
    auto* st = app.add_subcommand("structure", "join/union decomposition as DSL text");
    std::string st_pmn, st_rs;
    st->add_option("--pmn", st_pmn, "p,m,n for Z_{p^m}^n");
    st->add_option("--rs", st_rs, "r,s for Z_2^r x Z_4^s");

    // verify
    auto* ve = app.add_subcommand("verify", "cross-check all spectrum paths");
    std::string ve_pmn, ve_rs, ve_group, ve_all_pmn, ve_all_rs;
    bool ve_timing = false;
    ve->add_option("--pmn", ve_pmn, "p,m,n for Z_{p^m}^n");
    ve->add_option("--rs", ve_rs, "r,s for Z_2^r x Z_4^s");
    ve->add_option("--group", ve_group, "group descriptor");
    ve->add_option("--all-pmn", ve_all_pmn, "grid, e.g. p<=5,m<=3,n<=3,ordercap=300");
    ve->add_option("--all-rs", ve_all_rs, "grid, e.g. r<=6,s<=3,ordercap=300");
    ve->add_flag("--timing", ve_timing, "include elapsed time (non-deterministic output)");
    std::string ve_format = "json";
    ve->add_option("--format", ve_format, "json|csv|latex-table|plain");

    // classify
    auto* cl = app.add_subcommand("classify", "boolean classifiers of the power graph");
    std::string cl_pmn, cl_rs, cl_group;
    cl->add_option("--pmn", cl_pmn, "p,m,n for Z_{p^m}^n");
    cl->add_option("--rs", cl_rs, "r,s for Z_2^r x Z_4^s");
    cl->add_option("--group", cl_group, "group descriptor");
    std::string cl_format = "json";
    cl->add_option("--format", cl_format, "json|csv|latex-table|plain");

    // counts
    auto* co = app.add_subcommand("counts", "order/degree class counts for Z_2^r x Z_4^s");
    std::string co_rs;
    co->add_option("--rs", co_rs, "r,s")->required();
    std::string co_format = "json";
    co->add_option("--format", co_format, "json|csv|latex-table|plain");

    // table
    auto* ta = app.add_subcommand("table", "bulk spectra from the closed forms");
    std::string ta_pmn, ta_rs, ta_pmn_grid, ta_rs_grid;
    ta->add_option("--pmn", ta_pmn, "single p,m,n row");
    ta->add_option("--rs", ta_rs, "single r,s row");
    ta->add_option("--pmn-grid", ta_pmn_grid, "e.g. p=2..3,m=1..2,n=1..2");
    ta->add_option("--rs-grid", ta_rs_grid, "e.g. r=0..2,s=1..2");
    std::string ta_format = "json";
    ta->add_option("--format", ta_format, "json|csv|latex-table|plain");

    std::vector<const char*> argv;
    argv.push_back("pgspec");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    Caps caps = caps_from_env();

    if (sp->parsed()) {
        int given = !sp_pmn.empty() + !sp_rs.empty() + !sp_group.empty();
        if (given != 1)
            throw UsageError("spectrum: exactly one of --pmn, --rs, --group is required");
        Format format = parse_format(sp_format);
        SpectrumResult res;
        if (!sp_pmn.empty()) res = spectrum_for_pmn(parse_pmn(sp_pmn));
        else if (!sp_rs.empty()) res = spectrum_for_rs(parse_rs(sp_rs));
        else res = spectrum_for_group(parse_group_descriptor(sp_group), caps);
        emit_spectrum(res, format, out);
        return 0;
    }

    if (st->parsed()) {
        int given = !st_pmn.empty() + !st_rs.empty();
        if (given != 1)
            throw UsageError("structure: exactly one of --pmn, --rs is required");
        GraphExpr expr = !st_pmn.empty()
                             ? [&] {
                                   ZpmnParams p = parse_pmn(st_pmn);
                                   return power_graph_expr_zpmn(p.p, p.m, p.n);
                               }()
                             : [&] {
                                   RsParams rs = parse_rs(st_rs);
                                   return power_graph_expr_z2r4s(rs.r, rs.s);
                               }();
        out << print_expr(expr) << '\n';
        return 0;
    }

    if (ve->parsed()) {
        int given = !ve_pmn.empty() + !ve_rs.empty() + !ve_group.empty() +
                    !ve_all_pmn.empty() + !ve_all_rs.empty();
        if (given != 1)
            throw UsageError(
                "verify: exactly one of --pmn, --rs, --group, --all-pmn, --all-rs is required");
        Format format = parse_format(ve_format);
        std::vector<GroupSpec> groups;
        if (!ve_pmn.empty()) {
            ZpmnParams p = parse_pmn(ve_pmn);
            groups.push_back(GroupSpec::make(
                std::vector<u64>(p.n, pow_u64_checked(p.p, p.m))));
        } else if (!ve_rs.empty()) {
            RsParams rs = parse_rs(ve_rs);
            std::vector<u64> factors(rs.r, 2);
            factors.insert(factors.end(), rs.s, 4);
            groups.push_back(GroupSpec::make(std::move(factors)));
        } else if (!ve_group.empty()) {
            groups.push_back(parse_group_descriptor(ve_group));
        } else if (!ve_all_pmn.empty()) {
            groups = grid_pmn(ve_all_pmn);
        } else {
            groups = grid_rs(ve_all_rs);
        }
        return cmd_verify(groups, format, ve_timing, caps, out);
    }

    if (cl->parsed()) {
        int given = !cl_pmn.empty() + !cl_rs.empty() + !cl_group.empty();
        if (given != 1)
            throw UsageError("classify: exactly one of --pmn, --rs, --group is required");
        Format format = parse_format(cl_format);
        GroupSpec g = GroupSpec::make({});
        if (!cl_pmn.empty()) {
            ZpmnParams p = parse_pmn(cl_pmn);
            g = GroupSpec::make(std::vector<u64>(p.n, pow_u64_checked(p.p, p.m)));
        } else if (!cl_rs.empty()) {
            RsParams rs = parse_rs(cl_rs);
            std::vector<u64> factors(rs.r, 2);
            factors.insert(factors.end(), rs.s, 4);
            g = GroupSpec::make(std::move(factors));
        } else {
            g = parse_group_descriptor(cl_group);
        }
        emit_classify(format_group_descriptor(g), classify_flags(g, caps), format, out);
        return 0;
    }

    if (co->parsed()) {
        Format format = parse_format(co_format);
        return cmd_counts(parse_rs(co_rs), format, caps, out);
    }

    if (ta->parsed()) {
        int given = !ta_pmn.empty() + !ta_rs.empty() + !ta_pmn_grid.empty() +
                    !ta_rs_grid.empty();
        if (given != 1)
            throw UsageError(
                "table: exactly one of --pmn, --rs, --pmn-grid, --rs-grid is required");
        Format format = parse_format(ta_format);
        std::vector<TableRow> rows;
        if (!ta_pmn.empty()) {
            auto res = spectrum_for_pmn(parse_pmn(ta_pmn));
            rows.push_back({res.params, res.group, std::move(res.spectrum)});
        } else if (!ta_rs.empty()) {
            auto res = spectrum_for_rs(parse_rs(ta_rs));
            rows.push_back({res.params, res.group, std::move(res.spectrum)});
        } else if (!ta_pmn_grid.empty()) {
            rows = table_rows_pmn_grid(ta_pmn_grid);
        } else {
            rows = table_rows_rs_grid(ta_rs_grid);
        }
        emit_table(rows, format, out);
        return 0;
    }

    err << "usage error: no subcommand given\n";
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_cli_inner(args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace pgraph
