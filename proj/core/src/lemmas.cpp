#include "jfusion/lemmas.hpp"

#include <random>

#include "jfusion/enumerate.hpp"
#include "jfusion/johnson.hpp"

namespace jfusion {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

void record(CheckResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (ok) return;
    r.passed = false;
    if (r.failures.size() < kMaxReportedFailures) r.failures.push_back(what);
}

std::string triple(int k, int a, int b, int c) {
    return "k=" + std::to_string(k) + " (a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
}

}  // namespace

CheckResult check_scalar_positivity(int max_k) {
    CheckResult r{"scalar positivity iff triangle inequality"};
    for (int k = 1; k <= max_k; ++k)
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                for (int c = 0; c <= k; ++c) {
                    const bool positive = scalar_structure_constant(k, a, b, c).eventually_positive();
                    record(r, positive == triangle_positive(a, b, c), triple(k, a, b, c));
                }
    return r;
}

CheckResult check_scalar_leading_terms(int max_k) {
    CheckResult r{"scalar closed-form leading term"};
    for (int k = 1; k <= max_k; ++k)
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                for (int c = 0; c <= k; ++c) {
                    if (!triangle_positive(a, b, c)) continue;
                    const auto p = scalar_structure_constant(k, a, b, c);
                    const LeadingTerm lt = scalar_leading_term(k, a, b, c);
                    bool ok = !p.is_zero() && p.leading_term() == lt;
                    // deg <= min(b,c), with equality iff a <= max(b,c)
                    const int deg = *p.degree();
                    ok = ok && deg <= std::min(b, c) && ((deg == std::min(b, c)) == (a <= std::max(b, c)));
                    record(r, ok, triple(k, a, b, c));
                }
    return r;
}

CheckResult check_symmetry(int max_k) {
    CheckResult r{"p^a_{b,c} = p^a_{c,b}"};
    for (int k = 1; k <= max_k; ++k)
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                for (int c = b; c <= k; ++c) {
                    record(r, scalar_structure_constant(k, a, b, c) == scalar_structure_constant(k, a, c, b),
                           triple(k, a, b, c));
                }
    return r;
}

CheckResult check_vector_degree_bound(int max_k, int max_d) {
    CheckResult r{"vector degree bound and leading term"};
    for (int k = 1; k <= max_k; ++k)
        for (int d = 1; d <= max_d; ++d) {
            const StructureTable table(k, d);
            const Cube& cube = table.cube();
            for (std::size_t a = 0; a < cube.size(); ++a)
                for (std::size_t b = 0; b < cube.size(); ++b)
                    for (std::size_t c = 0; c < cube.size(); ++c) {
                        const auto& av = cube.vector(a);
                        const auto& bv = cube.vector(b);
                        const auto& cv = cube.vector(c);
                        const auto& p = table(a, b, c);
                        const std::string where = "k=" + std::to_string(k) + " a=" + av.to_string() +
                                                  " b=" + bv.to_string() + " c=" + cv.to_string();
                        const bool tri = triangle_positive(av, bv, cv);
                        if (p.is_zero() || !tri) {
                            record(r, p.is_zero() && !tri, where + ": positivity");
                            continue;
                        }
                        const int deg = *p.degree();
                        const int bound = weight(pointwise_min(bv, cv));
                        bool ok = deg <= bound && ((deg == bound) == dominates(pointwise_max(bv, cv), av));
                        if (deg == weight(bv) && deg == weight(cv)) {
                            ok = ok && bv == cv && dominates(bv, av) &&
                                 p.leading_term() == vector_leading_term_bc_equal(k, av, bv);
                        }
                        record(r, ok, where);
                    }
        }
    return r;
}

CheckResult check_polynomial_ring(unsigned seed, int samples) {
    CheckResult r{"polynomial ring axioms and binomial_in_m"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, 4);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    auto random_poly = [&] {
        std::vector<mpq_class> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = mpq_class(mpz_class(num(rng)), mpz_class(den(rng)));
        return RationalPolynomial(std::move(c));
    };
    for (int i = 0; i < samples; ++i) {
        const auto p = random_poly();
        const auto q = random_poly();
        const auto s = random_poly();
        bool ok = (p + q) + s == p + (q + s) && (p * q) * s == p * (q * s) && p * (q + s) == p * q + p * s &&
                  p * q == q * p && p + q == q + p && p - p == RationalPolynomial();
        if (!p.is_zero() && !q.is_zero()) ok = ok && *(p * q).degree() == *p.degree() + *q.degree();
        record(r, ok, "ring sample " + std::to_string(i));
    }
    std::uniform_int_distribution<long> shift(-6, 3);
    std::uniform_int_distribution<int> tdist(0, 6);
    std::uniform_int_distribution<long> mdist(0, 20);
    for (int i = 0; i < samples; ++i) {
        const long sh = shift(rng);
        const int t = tdist(rng);
        long m = mdist(rng);
        if (m + sh < t) m = t - sh;
        const mpq_class got = RationalPolynomial::binomial_in_m(sh, t).evaluate(mpq_class(m));
        record(r, got == mpq_class(binomial(m + sh, t)),
               "C(m" + std::to_string(sh) + "," + std::to_string(t) + ") at m=" + std::to_string(m));
    }
    return r;
}

CheckResult check_fusion_structure(int k, int d, unsigned seed, unsigned workers) {
    CheckResult r{"fusion cell structure at k=" + std::to_string(k) + " d=" + std::to_string(d)};
    EnumerationOptions options;
    options.workers = workers;
    const auto report = enumerate_fusions(k, d, options);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> extra(0, 12);
    std::vector<std::pair<long, StructureTable>> numeric;
    for (long m : {3L * k, 3L * k + 1 + extra(rng)}) numeric.emplace_back(m, StructureTable(k, d, Mode::numeric(m)));

    for (const auto& f : report.fusions) {
        const auto& s = f.partition;
        const std::string name = s.to_string();
        const auto order = domination_preorder(s);
        record(r, order.antisymmetric, name + ": domination preorder not antisymmetric");
        for (std::size_t beta = 0; beta < s.cell_count(); ++beta) {
            const auto kp = key_prop_report(s, beta);
            record(r, kp.passed(), name + ": " + (kp.failures.empty() ? std::string("?") : kp.failures.front()));
            const auto cell = analyze_cell(s, beta);
            for (std::size_t alpha = 0; alpha < s.cell_count(); ++alpha) {
                const bool positive = cell.n_constants[alpha] && *cell.n_constants[alpha] > 0;
                record(r, positive == order.precedes[alpha][beta],
                       name + ": N^beta_alpha > 0 disagrees with domination for (" + std::to_string(alpha) + "," +
                           std::to_string(beta) + ")");
            }
        }
        for (std::size_t alpha : order.minimal) {
            const auto cell = analyze_cell(s, alpha);
            std::vector<std::size_t> expect = s.cell(alpha);
            expect.insert(expect.begin(), s.cube().zero_id());
            bool ok = cell.down_closure == expect;
            std::vector<int> owner(static_cast<std::size_t>(d), 0);
            std::size_t support_size = support(s.cube().vector(cell.star.front())).size();
            bool corners = true;
            for (std::size_t id : cell.star) {
                const auto supp = support(s.cube().vector(id));
                ok = ok && supp.size() == support_size;
                for (int c : supp) ok = ok && ++owner[static_cast<std::size_t>(c)] == 1;
                for (int x : s.cube().vector(id).entries()) corners = corners && (x == 0 || x == k);
            }
            ok = ok && (cell.weight == 1 || corners);
            record(r, ok, name + ": minimal cell " + std::to_string(alpha) + " breaks the corollary");
        }
        for (const auto& [m, table] : numeric) {
            record(r, is_valid_fusion(table, s).valid, name + ": generic-valid but invalid at m=" + std::to_string(m));
        }
    }
    return r;
}

LemmaSuiteReport run_lemma_suite(unsigned seed, unsigned workers) {
    LemmaSuiteReport out;
    out.seed = seed;
    out.checks.push_back(check_scalar_positivity(4));
    out.checks.push_back(check_scalar_leading_terms(4));
    out.checks.push_back(check_symmetry(4));
    out.checks.push_back(check_vector_degree_bound(2, 3));
    out.checks.push_back(check_polynomial_ring(seed, 50));
    for (auto [k, d] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
        out.checks.push_back(check_fusion_structure(k, d, seed, workers));
    }
    return out;
}

}  // namespace jfusion
