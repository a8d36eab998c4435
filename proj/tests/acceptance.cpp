// Acceptance suite: one criterion per section, each printed as a PASS/FAIL
// line with its runtime. Exits nonzero if any criterion fails. Criteria with
// runtime budgets enforce them.

#include "tangentad/suites.hpp"

#include "support/finite_diff.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace tangentad;

namespace {

int failures = 0;

void criterion(const std::string& id, double time_budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_budget_s > 0 && secs > time_budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool report_ok(const Report& rep, std::string& detail) {
    if (rep.all_pass()) return true;
    auto f = rep.failures();
    detail = std::to_string(f.size()) + " failing diagrams, first: " + f[0].diagram + " @ " +
             f[0].sample;
    return false;
}

} // namespace

int main() {
    std::printf("acceptance suite, tool version %s\n", suites::kVersion);

    criterion("01 weil-relations-and-pullbacks", 5.0, [](std::string& detail) {
        auto rep = suites::weil_suite(3);
        bool has_probe = false;
        for (const auto& r : rep.results)
            if (r.diagram.rfind("weil/pullback-universal/", 0) == 0) has_probe = true;
        return report_ok(rep, detail) && has_probe;
    });

    criterion("02 poly-tangent-axioms-50-maps", 30.0, [](std::string& detail) {
        auto rep = suites::poly_suite(42, 50, Mutation::none);
        std::size_t mor_samples = 0;
        for (const auto& r : rep.results)
            if (r.diagram == "nat/p") ++mor_samples;
        if (mor_samples != 50) {
            detail = "expected 50 morphism samples";
            return false;
        }
        return report_ok(rep, detail);
    });

    criterion("03 bracket-vs-classical-oracle", 0, [](std::string& detail) {
        PolyModel m;
        Rng rng(1003);
        for (int i = 0; i < 20; ++i) {
            std::size_t dim = 1 + rng.below(3);
            auto u = suites::random_vf(m, rng, dim, 2);
            auto v = suites::random_vf(m, rng, dim, 2);
            auto f = m.compose(m.tangent_mor(v.section), u.section);
            auto g = m.compose(m.flip(dim), m.compose(m.tangent_mor(u.section), v.section));
            auto h = subtract_t2(m, dim, f, g);
            if (!lift_side_condition(m, dim, h)) {
                detail = "side condition failed at pair " + std::to_string(i);
                return false;
            }
            if (!(bracket(m, u, v).section == classical_bracket_section(u.section, v.section))) {
                detail = "oracle mismatch at pair " + std::to_string(i);
                return false;
            }
        }
        return true;
    });

    criterion("04 lie-algebra-bundle-laws", 60.0, [](std::string& detail) {
        PolyModel m;
        Rng rng(1004);
        std::vector<FieldTriple<PolyModel>> triples;
        for (int i = 0; i < 20; ++i) {
            std::size_t dim = 1 + rng.below(3);
            triples.push_back({suites::random_vf(m, rng, dim, 2),
                               suites::random_vf(m, rng, dim, 2),
                               suites::random_vf(m, rng, dim, 2)});
        }
        auto rep = check_structure_theorems(m, triples);
        std::set<std::string> seen;
        for (const auto& r : rep.results) seen.insert(r.diagram);
        for (const char* need : {"vf/bracket-left-additive", "vf/bracket-zero",
                                 "vf/bracket-antisym", "vf/jacobi"})
            if (!seen.count(need)) {
                detail = std::string("missing diagram ") + need;
                return false;
            }
        return report_ok(rep, detail);
    });

    criterion("05 bracket-f-relatedness", 0, [](std::string& detail) {
        PolyModel m;
        auto x0 = Poly::variable(2, 0), x1 = Poly::variable(2, 1);
        PolyMap U(2, {x0 + x1, x1});
        PolyMap Uinv(2, {x0 - x1, x1});
        std::vector<FRelatedSample<PolyModel>> related;
        Rng rng(1005);
        for (int i = 0; i < 10; ++i) {
            auto v1 = suites::linear_pencil_field(m, rng.range(-2, 2), rng.range(-2, 2),
                                                  rng.range(-2, 2), rng.range(-2, 2), 1, 0);
            auto v2 = suites::linear_pencil_field(m, rng.range(-2, 2), rng.range(-2, 2),
                                                  rng.range(-2, 2), rng.range(-2, 2), 1, 0);
            auto push = [&](const VectorField<PolyModel>& v) {
                return make_vector_field(
                    m, 2, m.compose(m.tangent_mor(U), m.compose(v.section, Uinv)));
            };
            related.push_back({U, v1, v2, push(v1), push(v2)});
        }
        auto rep = check_structure_theorems(m, {}, related);
        return report_ok(rep, detail);
    });

    criterion("06 vf-monad-commuting-families", 0, [](std::string& detail) {
        PolyModel m;
        Rng rng(1006);
        std::vector<FieldTriple<PolyModel>> triples;
        for (int i = 0; i < 10; ++i) {
            long long a = rng.range(-2, 2), b = rng.range(-2, 2), c = rng.range(-2, 2),
                      d = rng.range(-2, 2);
            triples.push_back({suites::linear_pencil_field(m, a, b, c, d, 1, 0),
                               suites::linear_pencil_field(m, a, b, c, d, 1, 1),
                               suites::linear_pencil_field(m, a, b, c, d, 2, 0)});
        }
        auto rep = check_vf_monad(m, triples);
        if (!report_ok(rep, detail)) return false;
        // a non-commuting pair must be rejected with a witness
        auto u = suites::linear_pencil_field(m, 0, 1, 0, 0, 1, 0);
        auto v = suites::linear_pencil_field(m, 1, 0, 0, 2, 1, 0);
        try {
            vf_monad_mult(m, u, v);
            detail = "non-commuting pair was not rejected";
            return false;
        } catch (const CommutingPairError& e) {
            if (std::string(e.what()).find("x0") == std::string::npos) {
                detail = "rejection carries no witness";
                return false;
            }
        }
        return true;
    });

    criterion("07 writer-monad-and-vf-lift", 0, [](std::string& detail) {
        auto rep = suites::monad_suite(1007, 10, WriterCorruption::none);
        bool lift_checked = false;
        for (const auto& r : rep.results)
            if (r.diagram.rfind("writer-lift/", 0) == 0) lift_checked = true;
        return report_ok(rep, detail) && lift_checked;
    });

    criterion("08 universality-round-trips", 0, [](std::string& detail) {
        auto rep = suites::universality_suite(1008);
        std::set<std::string> labels;
        for (const auto& r : rep.results) {
            auto slash = r.sample.find('/');
            if (slash != std::string::npos) labels.insert(r.sample.substr(0, slash));
        }
        if (labels.size() < 5) {
            detail = "fewer than 5 probe families";
            return false;
        }
        return report_ok(rep, detail);
    });

    criterion("09 vf-as-equifier-of-inserter", 60.0, [](std::string& detail) {
        auto corpus = suites::category_corpus();
        if (corpus.size() < 6) {
            detail = "corpus too small";
            return false;
        }
        for (const auto& cat : corpus) {
            auto out = suites::pie_suite(cat, fincat::SizeBounds{});
            if (!out.report.all_pass()) {
                auto f = out.report.failures();
                detail = cat.name + ": " + f[0].diagram;
                return false;
            }
        }
        return true;
    });

    criterion("10 restriction-laws-and-extension", 0, [](std::string& detail) {
        auto rep = suites::rational_suite(1010, 30);
        if (!report_ok(rep, detail)) return false;
        // positive and negative extension probes
        auto x0 = Poly::variable(1, 0);
        ExtensionProbe pos{"poly", {1}, {make_rational_map(
                                            1, {rf_from_poly(x0), rf_from_poly(x0 * x0)})}};
        if (!extended_vf_factorization(pos).all_pass()) {
            detail = "polynomial section rejected";
            return false;
        }
        ExtensionProbe neg{"partial",
                           {1},
                           {make_rational_map(1, {rf_from_poly(x0),
                                                  make_rf(Poly::constant(1, rat(1)), x0)})}};
        auto nrep = extended_vf_factorization(neg);
        if (nrep.all_pass()) {
            detail = "partial section admitted";
            return false;
        }
        if (nrep.failures()[0].witness.find("x0") == std::string::npos) {
            detail = "no denominator witness";
            return false;
        }
        return true;
    });

    criterion("11 cross-model-agreement", 0, [](std::string& detail) {
        Rng rng(1011);
        for (int i = 0; i < 20; ++i) {
            std::size_t m = 1 + rng.below(3), n = 1 + rng.below(2);
            PolyMap f = random_poly_map(rng, m, n, 3);
            PolyMap Tf = tangent_map(f);
            SmoothMap sf = poly_to_smooth(f);
            for (int pt = 0; pt < 32; ++pt) {
                std::vector<double> x(m), dir(m), both;
                for (auto& xi : x) xi = rng.real(-1, 1);
                for (auto& di : dir) di = rng.real(-1, 1);
                auto [v, d] = dual_eval(sf, x, dir);
                both = x;
                both.insert(both.end(), dir.begin(), dir.end());
                auto exact = Tf.eval_double(both);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!testsupport::close_rel(v[k], exact[k], 1e-9) ||
                        !testsupport::close_rel(d[k], exact[n + k], 1e-9)) {
                        detail = "dual/poly mismatch at map " + std::to_string(i);
                        return false;
                    }
                }
                auto fd = testsupport::central_difference(
                    [&](const std::vector<double>& p) { return sf.eval(p); }, x, dir);
                for (std::size_t k = 0; k < n; ++k)
                    if (!testsupport::close_rel(d[k], fd[k], 1e-7)) {
                        detail = "finite-difference mismatch at map " + std::to_string(i);
                        return false;
                    }
            }
        }
        return true;
    });

    criterion("12 mutation-sensitivity", 0, [](std::string& detail) {
        struct Case {
            std::string name;
            std::function<Report()> run;
        };
        std::vector<Case> cases;
        for (auto mname : {"c-identity", "l-degenerate", "s-proj", "z-one", "n-identity"}) {
            cases.push_back({mname, [mname] {
                                 return suites::poly_suite(1012, 6, mutation_from_name(mname));
                             }});
        }
        cases.push_back({"alpha-drop-base", [] {
                             return suites::monad_suite(1012, 4, WriterCorruption::drop_base);
                         }});
        cases.push_back({"alpha-drop-tangent", [] {
                             return suites::monad_suite(1012, 4, WriterCorruption::drop_tangent);
                         }});
        for (const auto& c : cases) {
            auto rep = c.run();
            auto fails = rep.failures();
            if (fails.empty()) {
                detail = c.name + " not caught";
                return false;
            }
            std::printf("    mutation %-20s caught by %s\n", c.name.c_str(),
                        fails[0].diagram.c_str());
        }
        return true;
    });

    if (failures == 0) {
        std::printf("all %d criteria passed\n", 12);
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
