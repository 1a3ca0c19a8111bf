#include "pgraph/oracle.hpp"

#include <chrono>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "pgraph/closed_form.hpp"
#include "pgraph/descriptor.hpp"
#include "pgraph/graph_expr.hpp"
#include "pgraph/numutil.hpp"

namespace pgraph {

using u64 = std::uint64_t;

Bigint IntMatrix::trace() const {
    Bigint t;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

Bigint IntMatrix::max_abs_entry() const {
    Bigint m;
    for (const Bigint& e : entries_) {
        Bigint a = e.abs();
        if (a > m) m = a;
    }
    return m;
}

IntMatrix laplacian_matrix(const Graph& g) {
    std::size_t n = g.vertex_count();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Bigint(static_cast<unsigned long long>(g.degree(i)));
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) m.at(i, j) = Bigint(-1);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Faddeev-LeVerrier: M_1 = A, a_1 = -tr(M_1); M_k = A (M_{k-1} + a_{k-1} I),
// a_k = -tr(M_k)/k. Every division is exact over the integers.

IntPolynomial char_poly_faddeev_leverrier(const IntMatrix& a) {
    std::size_t d = a.dimension();
    std::vector<Bigint> coeffs(d + 1);
    coeffs[d] = Bigint(1);
    if (d == 0) return IntPolynomial(std::move(coeffs));

    IntMatrix m = a;
    Bigint ak = -m.trace();
    coeffs[d - 1] = ak;
    for (std::size_t k = 2; k <= d; ++k) {
        // m <- a * (m + ak * I)
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) += ak;
        IntMatrix next(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) {
                const Bigint& ail = a.at(i, l);
                if (ail.is_zero()) continue;
                for (std::size_t j = 0; j < d; ++j)
                    next.at(i, j).add_mul(ail, m.at(l, j));
            }
        m = std::move(next);
        ak = (-m.trace()).divexact(static_cast<std::int64_t>(k));
        coeffs[d - k] = ak;
    }
    return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Modular engine: char poly mod several primes via Hessenberg reduction,
// recombined coefficient-wise.

namespace {

// similarity-preserving Hessenberg reduction of h (row-major, n x n) mod p
void hessenberg_mod(std::vector<u64>& h, std::size_t n, u64 p) {
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t pivot = k + 1;
        while (pivot < n && h[pivot * n + k] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != k + 1) {
            // swap rows and columns to keep similarity
            for (std::size_t j = 0; j < n; ++j) std::swap(h[pivot * n + j], h[(k + 1) * n + j]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i * n + pivot], h[i * n + k + 1]);
        }
        u64 inv = inv_mod_u64(h[(k + 1) * n + k], p);
        for (std::size_t i = k + 2; i < n; ++i) {
            u64 factor = mul_mod_u64(h[i * n + k], inv, p);
            if (factor == 0) continue;
            // row_i -= factor * row_{k+1}; col_{k+1} += factor * col_i
            for (std::size_t j = 0; j < n; ++j) {
                u64 sub = mul_mod_u64(factor, h[(k + 1) * n + j], p);
                h[i * n + j] = (h[i * n + j] + p - sub) % p;
            }
            for (std::size_t i2 = 0; i2 < n; ++i2) {
                u64 add = mul_mod_u64(factor, h[i2 * n + i], p);
                h[i2 * n + k + 1] = (h[i2 * n + k + 1] + add) % p;
            }
        }
    }
}

// char poly of an upper Hessenberg matrix mod p, constant term first.
// p_k(x) = (x - h_kk) p_{k-1}(x)
//          - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}(x)
std::vector<u64> hessenberg_charpoly_mod(const std::vector<u64>& h, std::size_t n, u64 p) {
    std::vector<std::vector<u64>> polys;
    polys.reserve(n + 1);
    polys.push_back({1});  // p_0 = 1
    for (std::size_t k = 1; k <= n; ++k) {
        const std::vector<u64>& prev = polys[k - 1];
        std::vector<u64> cur(k + 1, 0);
        u64 hkk = h[(k - 1) * n + (k - 1)];
        // (x - h_kk) * prev
        for (std::size_t t = 0; t < prev.size(); ++t) {
            cur[t + 1] = (cur[t + 1] + prev[t]) % p;
            u64 sub = mul_mod_u64(hkk, prev[t], p);
            cur[t] = (cur[t] + p - sub) % p;
        }
        u64 subdiag_prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            subdiag_prod = mul_mod_u64(subdiag_prod, h[i * n + (i - 1)], p);
            if (subdiag_prod == 0) break;
            u64 hik = h[(i - 1) * n + (k - 1)];
            if (hik == 0) continue;
            u64 scale = mul_mod_u64(hik, subdiag_prod, p);
            const std::vector<u64>& pi = polys[i - 1];
            for (std::size_t t = 0; t < pi.size(); ++t) {
                u64 sub = mul_mod_u64(scale, pi[t], p);
                cur[t] = (cur[t] + p - sub) % p;
            }
        }
        polys.push_back(std::move(cur));
    }
    return polys[n];
}

// the first `count` primes below 2^62, descending; cached under a mutex so
// parallel sweeps can share the list
std::vector<u64> crt_primes(std::size_t count) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> lock(mu);
    u64 candidate = primes.empty() ? ((u64{1} << 62) - 1) : primes.back() - 2;
    while (primes.size() < count) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace

IntPolynomial char_poly_modular(const IntMatrix& a) {
    std::size_t d = a.dimension();
    if (d == 0) return IntPolynomial({Bigint(1)});

    // coefficient bound: |c_k| <= C(d,k) (2 max|entry| d)^k <= (4 max|entry| d)^d
    Bigint maxentry = a.max_abs_entry();
    if (maxentry.is_zero()) maxentry = Bigint(1);
    Bigint bound = Bigint::pow(Bigint(4) * maxentry * Bigint(static_cast<unsigned long long>(d)),
                               d);
    Bigint needed = Bigint(2) * bound + Bigint(1);

    // each prime is just below 2^62, so 61 bits per prime is a safe floor
    std::vector<u64> primes = crt_primes(needed.bit_length() / 61 + 1);
    std::vector<std::vector<u64>> residues;
    residues.reserve(primes.size());
    for (u64 p : primes) {
        std::vector<u64> h(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) h[i * d + j] = a.at(i, j).mod_u64(p);
        hessenberg_mod(h, d, p);
        residues.push_back(hessenberg_charpoly_mod(h, d, p));
    }
    Bigint prime_product(1);
    for (u64 p : primes) prime_product *= Bigint(p);

    // incremental CRT per coefficient, then lift to the symmetric range
    std::vector<Bigint> coeffs(d + 1);
    Bigint half = prime_product;
    half.div_u64_in_place(2);
    for (std::size_t t = 0; t <= d; ++t) {
        Bigint x(residues[0][t]);
        Bigint mod_so_far(primes[0]);
        for (std::size_t j = 1; j < primes.size(); ++j) {
            u64 p = primes[j];
            u64 x_mod = x.mod_u64(p);
            u64 r = residues[j][t];
            u64 delta = r >= x_mod ? r - x_mod : r + p - x_mod;
            u64 step = mul_mod_u64(delta, inv_mod_u64(mod_so_far.mod_u64(p), p), p);
            x += mod_so_far * Bigint(step);
            mod_so_far *= Bigint(p);
        }
        if (x > half) x -= prime_product;
        coeffs[t] = std::move(x);
    }
    return IntPolynomial(std::move(coeffs));
}

namespace {

// crossover: Faddeev-LeVerrier is simpler but quartic with big-number
// growth, so larger instances go through the modular engine
constexpr std::size_t kFaddeevLeverrierMax = 64;

}  // namespace

IntPolynomial char_poly_exact(const IntMatrix& m, std::size_t cap) {
    if (m.dimension() > cap)
        throw std::length_error("char_poly_exact: dimension exceeds the oracle cap");
    if (m.dimension() <= kFaddeevLeverrierMax) return char_poly_faddeev_leverrier(m);
    return char_poly_modular(m);
}

FactoredSpectrum integer_root_factor(const IntPolynomial& p, const Bigint& bound) {
    if (!p.is_monic())
        throw std::invalid_argument("integer_root_factor: polynomial is not monic");
    FactoredSpectrum out;
    IntPolynomial rest = p;
    for (Bigint root; root <= bound && rest.degree() > 0; root += Bigint(1)) {
        Bigint mult;
        while (rest.degree() > 0 && rest.eval(root).is_zero()) {
            rest = rest.divexact_linear(root);
            mult += Bigint(1);
        }
        if (mult > Bigint(0)) out.add(root, mult);
    }
    if (rest.degree() > 0)
        throw std::domain_error(
            "integer_root_factor: non-integral spectrum (a factor of degree " +
            std::to_string(rest.degree()) + " has no integer root in range)");
    return out;
}

FactoredSpectrum graph_spectrum_oracle(const Graph& g, std::size_t oracle_cap) {
    IntPolynomial cp = char_poly_exact(laplacian_matrix(g), oracle_cap);
    return integer_root_factor(cp, Bigint(static_cast<unsigned long long>(g.vertex_count())));
}

FactoredSpectrum brute_spectrum(const GroupSpec& g, std::size_t oracle_cap,
                                std::size_t enum_cap) {
    g.enum_count(std::min(oracle_cap, enum_cap));  // enforce both caps up front
    return graph_spectrum_oracle(build_power_graph(g, enum_cap), oracle_cap);
}

// ---------------------------------------------------------------------------
// Verification harness

namespace {

void add_pairwise_checks(VerificationReport& rep) {
    for (std::size_t i = 0; i < rep.spectra.size(); ++i)
        for (std::size_t j = i + 1; j < rep.spectra.size(); ++j) {
            const auto& [name_a, spec_a] = rep.spectra[i];
            const auto& [name_b, spec_b] = rep.spectra[j];
            bool equal = spec_a == spec_b;
            std::string detail = equal ? std::string()
                                       : "first difference: " + spec_a.first_difference(spec_b);
            rep.checks.push_back({name_a + " == " + name_b, equal, detail});
        }
}

}  // namespace

VerificationReport verify_group(const GroupSpec& g, const Caps& caps) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.descriptor = format_group_descriptor(g);
    rep.order = g.order();

    auto zpmn = as_homocyclic_prime_power(g);
    auto two_four = as_two_four(g);

    if (zpmn) {
        ZpmnParams params = ZpmnParams::make(zpmn->p, zpmn->m, zpmn->n);
        rep.spectra.emplace_back("closed_form_zpmn", laplacian_spectrum_zpmn(params));
        rep.spectra.emplace_back(
            "calculus_zpmn", expr_spectrum(power_graph_expr_zpmn(zpmn->p, zpmn->m, zpmn->n)));
    }
    if (two_four && two_four->s >= 1) {
        rep.spectra.emplace_back("closed_form_z2r4s",
                                 laplacian_spectrum_z2r4s(two_four->r, two_four->s));
        rep.spectra.emplace_back("calculus_z2r4s",
                                 expr_spectrum(power_graph_expr_z2r4s(two_four->r, two_four->s)));
    }
    if (!zpmn && !two_four) rep.skipped.push_back("closed form: group is not in either family");

    bool realizable = g.order() <= Bigint(static_cast<unsigned long long>(
                                       std::min(caps.enum_cap, caps.oracle_cap)));
    if (realizable) {
        rep.spectra.emplace_back("oracle", brute_spectrum(g, caps.oracle_cap, caps.enum_cap));
    } else {
        rep.skipped.push_back("oracle: order exceeds the cap");
    }

    add_pairwise_checks(rep);

    // structural invariants on every computed spectrum
    for (const auto& [name, spec] : rep.spectra) {
        rep.checks.push_back({name + ": total multiplicity == |G|",
                              spec.total_multiplicity() == g.order(), spec.to_string()});
        rep.checks.push_back({name + ": multiplicity of 0 == 1",
                              spec.multiplicity_of(Bigint(0)) == Bigint(1), ""});
        if (!g.is_trivial())
            rep.checks.push_back({name + ": max eigenvalue == |G|",
                                  spec.max_eigenvalue() == g.order(), ""});
    }
    std::optional<Graph> graph;
    if (realizable) graph.emplace(build_power_graph(g, caps.enum_cap));

    if (graph && !rep.spectra.empty()) {
        Bigint twice_edges =
            Bigint(static_cast<unsigned long long>(graph->edge_count())) * Bigint(2);
        for (const auto& [name, spec] : rep.spectra)
            rep.checks.push_back({name + ": trace == 2|E|", spec.trace() == twice_edges,
                                  "2|E| = " + twice_edges.to_string()});
    }

    // counting and degree formulas for the Z_2^r x Z_4^s family
    if (two_four && graph) {
        unsigned r = two_four->r, s = two_four->s;
        // canonical coordinate order (all 2s first) is required for the
        // per-element statements
        std::vector<u64> canonical(r, 2);
        canonical.insert(canonical.end(), s, 4);
        if (g.factors() == canonical) {
            auto classes = order_class_counts(g, caps.enum_cap);
            Bigint n2(classes.count(2) ? classes.at(2) : 0);
            Bigint n4(classes.count(4) ? classes.at(4) : 0);
            rep.checks.push_back({"order-2 count formula == enumeration",
                                  count_order2_z2r4s(r, s) == n2,
                                  "formula " + count_order2_z2r4s(r, s).to_string() +
                                      ", enumerated " + n2.to_string()});
            rep.checks.push_back({"order-4 count formula == enumeration",
                                  count_order4_z2r4s(r, s) == n4,
                                  "formula " + count_order4_z2r4s(r, s).to_string() +
                                      ", enumerated " + n4.to_string()});

            bool degrees_ok = true;
            Bigint deg1_count, degbig_count;
            for (std::size_t v = 0; v < graph->vertex_count(); ++v) {
                const GroupElement& el = graph->labels()[v];
                if (element_order(g, el) != 2) continue;
                Bigint actual(static_cast<unsigned long long>(graph->degree(v)));
                if (degree_order2_closed(el, r, s) != actual) degrees_ok = false;
                if (actual == Bigint(1)) deg1_count += Bigint(1);
                else degbig_count += Bigint(1);
            }
            rep.checks.push_back({"order-2 degree formula == graph degrees", degrees_ok, ""});
            auto classes_closed = degree_class_counts_z2r4s(r, s);
            rep.checks.push_back({"degree class counts == enumeration",
                                  classes_closed.degree_one == deg1_count &&
                                      classes_closed.degree_big == degbig_count,
                                  "formula (" + classes_closed.degree_one.to_string() + ", " +
                                      classes_closed.degree_big.to_string() + "), enumerated (" +
                                      deg1_count.to_string() + ", " + degbig_count.to_string() +
                                      ")"});
        }
    }

    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

}  // namespace pgraph
