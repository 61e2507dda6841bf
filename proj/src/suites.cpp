#include "adsfam/suites.hpp"

#include <chrono>
#include <stdexcept>

#include "adsfam/asymptotics.hpp"
#include "adsfam/families.hpp"
#include "adsfam/geometry.hpp"
#include "adsfam/lemmas.hpp"

namespace adsfam {

using nlohmann::json;

json Report::to_json(bool with_timing) const {
    json j;
    j["check"] = check;
    j["params"] = json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["status"] = status;
    j["details"] = details;
    if (with_timing) j["timing_ms"] = timing_ms;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "brackets",    "equivariance",   "uniqueness", "parity", "centralizer",
        "special-values", "residue",     "geometry",   "lemmas"};
    return names;
}

bool suite_uses_degree(const std::string& suite) {
    return suite != "brackets" && suite != "geometry" && suite != "lemmas";
}

bool report_less(const Report& a, const Report& b) {
    auto key = [](const Report& r) {
        auto find = [&](const char* k) {
            auto it = r.params.find(k);
            return it == r.params.end() ? -1 : std::stoi(it->second);
        };
        return std::make_tuple(r.check, find("n"), find("N"));
    };
    return key(a) < key(b);
}

namespace {

void push_checks(Report& rep, const std::vector<RelationCheck>& checks) {
    for (const auto& rc : checks) {
        if (!rc.pass) rep.status = "fail";
        rep.details.push_back({{"item", rc.relation}, {"pass", rc.pass}});
    }
}

void push_bool(Report& rep, const std::string& item, bool pass) {
    if (!pass) rep.status = "fail";
    rep.details.push_back({{"item", item}, {"pass", pass}});
}

Report suite_brackets(int n) {
    Report rep{"brackets", {{"n", std::to_string(n)}}, "pass"};
    LieContext ctx(n);
    int failed = 0, total = 0;
    for (const auto& rc : ctx.verify_bracket_table()) {
        ++total;
        if (!rc.pass) {
            ++failed;
            rep.status = "fail";
            rep.details.push_back({{"item", rc.relation}, {"pass", false}});
        }
    }
    rep.details.push_back({{"item", "bracket relations"}, {"total", total}, {"failed", failed}});
    push_bool(rep, "dimension n(n+1)/2", ctx.dim() == n * (n + 1) / 2);
    push_bool(rep, "jacobi identity", ctx.verify_jacobi());
    push_bool(rep, "form preservation", ctx.verify_form_preservation());
    return rep;
}

Report suite_equivariance(int n, int order) {
    Report rep{"equivariance", {{"n", std::to_string(n)}, {"N", std::to_string(order)}}, "pass"};
    LieContext big(n + 1);
    UEAElement d = build_family(big, compute_coefficients(n, order));
    push_checks(rep, verify_equivariance(big, d, order));
    return rep;
}

Report suite_uniqueness(int n, int order) {
    Report rep{"uniqueness", {{"n", std::to_string(n)}, {"N", std::to_string(order)}}, "pass"};
    LieContext big(n + 1);
    UniquenessResult u = verify_uniqueness(big, order);
    rep.details.push_back({{"item", "nullspace"}, {"dimension", u.dimension}});
    if (u.dimension != 1) rep.status = "fail";
    push_bool(rep, "generator proportional to family", u.generator_matches_family);
    // negative controls: every single-coefficient perturbation must break
    push_checks(rep, negative_controls(big, order));
    return rep;
}

Report suite_parity(int n, int order) {
    Report rep{"parity", {{"n", std::to_string(n)}, {"N", std::to_string(order)}}, "pass"};
    LieContext small(n), big(n + 1);
    UEAElement d = build_family(big, compute_coefficients(n, order));
    push_checks(rep, verify_parity(small, big, d, order));
    return rep;
}

Report suite_centralizer(int n, int bound) {
    Report rep{"centralizer", {{"n", std::to_string(n)}, {"N", std::to_string(bound)}}, "pass"};
    LieContext ctx(n);
    int dim = centralizer_dimension(ctx, bound);
    int expected = bound / 2 + 1;
    rep.details.push_back(
        {{"item", "centralizer dimension"}, {"dimension", dim}, {"expected", expected}});
    if (dim != expected) rep.status = "fail";
    push_bool(rep, "Laplacian powers centralize", laplacian_powers_centralize(ctx, bound));
    return rep;
}

Report suite_special_values(int n, int half_order) {
    Report rep{"special-values",
               {{"n", std::to_string(n)}, {"N", std::to_string(half_order)}},
               "pass"};
    push_checks(rep, verify_special_values(n, half_order));
    return rep;
}

Report suite_residue(int n, int order) {
    Report rep{"residue", {{"n", std::to_string(n)}, {"N", std::to_string(order)}}, "pass"};
    CoincidenceResult r = verify_coincidence(n, order);
    push_bool(rep, "proportional", r.proportional);
    if (order % 2 == 0) push_bool(rep, "constant matches closed form", r.matches_closed_form);
    rep.details.push_back({{"item", "constant"}, {"value", r.constant.str("L")}});
    for (int j = 1; j <= order / 2; ++j) {
        bool ok = derive_recursion_oracle(n, j).A[static_cast<size_t>(j)] ==
                  asymptotic_closed_form(n, j);
        push_bool(rep, "oracle matches closed form j=" + std::to_string(j), ok);
        push_bool(rep, "pole structure j=" + std::to_string(j), verify_pole_structure(n, j));
    }
    return rep;
}

MinkowskiPoint test_point(int n, int k) {
    MinkowskiPoint w;
    for (int i = 0; i < n - 1; ++i)
        w.push_back(rat(((k + 1) * (i + 2) * 3) % 19 - 9, 1 + (k + i) % 5));
    return w;
}

Report suite_geometry(int n) {
    Report rep{"geometry", {{"n", std::to_string(n)}}, "pass"};
    LieContext ctx(n);
    bool roundtrip = true, cone = true, scale_inv = true, multiple = true;
    for (int k = 0; k < 100; ++k) {
        MinkowskiPoint w = test_point(n, k);
        ConePoint p = embed(w);
        cone = cone && on_cone(p);
        roundtrip = roundtrip && invert(p) == w;
        ConePoint scaled = p;
        for (auto& c : scaled) c *= Rat(3, 7);
        scale_inv = scale_inv && invert(scaled) == w;
        // embed(invert(q)) is a positive multiple of q when t1 + x2 > 0
        ConePoint back = embed(invert(scaled));
        Rat factor = back[0] / scaled[0];
        bool mult = factor > 0;
        for (size_t i = 0; i < back.size(); ++i) mult = mult && back[i] == factor * scaled[i];
        multiple = multiple && mult;
    }
    push_bool(rep, "embedded points lie on the cone", cone);
    push_bool(rep, "invert(embed(w)) == w", roundtrip);
    push_bool(rep, "invert is scale invariant", scale_inv);
    push_bool(rep, "embed(invert(p)) is a positive multiple", multiple);
    bool singular = false;
    try {
        ConePoint p(static_cast<size_t>(n), Rat(0));
        p[0] = 1;
        p[1] = 1;
        p[3] = -1;
        invert(p);
    } catch (const std::domain_error&) {
        singular = true;
    }
    push_bool(rep, "singular set rejected", singular);
    bool exp_match = true, exp_hom = true, exp_iso = true;
    for (int k = 0; k < 5; ++k) {
        MinkowskiPoint w = test_point(n, k);
        GroupElement g = exp_nminus(ctx, w);
        exp_match = exp_match && (g.matrix * base_point(n + 1)) == embed(w);
        MinkowskiPoint v = test_point(n, k + 5), sum = w;
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
        exp_hom = exp_hom &&
                  g.matrix * exp_nminus(ctx, v).matrix == exp_nminus(ctx, sum).matrix;
        exp_iso = exp_iso && isotropy_check(ctx, g) == Isotropy::Neither;
    }
    push_bool(rep, "exp(n^-) matches the embedding", exp_match);
    push_bool(rep, "exp(n^-) is additive", exp_hom);
    push_bool(rep, "exp(n^-) moves the base ray", exp_iso);
    push_bool(rep, "w1 fixes the base ray", isotropy_check(ctx, ctx.w1()) == Isotropy::FixesRay);
    push_bool(rep, "w2 fixes the base ray", isotropy_check(ctx, ctx.w2()) == Isotropy::FixesRay);
    push_bool(rep, "J fixes the line with factor -1",
              isotropy_check(ctx, ctx.J()) == Isotropy::FixesLine);
    return rep;
}

Report suite_lemmas(int n) {
    Report rep{"lemmas", {{"n", std::to_string(n)}}, "pass"};
    LieContext ctx(n), big(n + 1);
    for (int N = 1; N <= 4; ++N) {
        push_bool(rep, "power commutator, diagonal, N=" + std::to_string(N),
                  power_commutator_diagonal(big, N));
        for (int r = 2; r <= big.n() - 3; ++r)
            push_bool(rep,
                      "power commutator, r=" + std::to_string(r) + ", N=" + std::to_string(N),
                      power_commutator_offdiagonal(big, N, r));
    }
    push_bool(rep, "Laplacian commutator shape", laplacian_commutator_shape(ctx));
    for (int j = 1; j <= 4; ++j)
        push_bool(rep, "Laplacian power commutator shape j=" + std::to_string(j),
                  laplacian_power_commutator_shape(ctx, j));
    return rep;
}

}  // namespace

Report run_suite(const std::string& suite, int n, int degree) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    if (suite == "brackets") rep = suite_brackets(n);
    else if (suite == "equivariance") rep = suite_equivariance(n, degree);
    else if (suite == "uniqueness") rep = suite_uniqueness(n, degree);
    else if (suite == "parity") rep = suite_parity(n, degree);
    else if (suite == "centralizer") rep = suite_centralizer(n, degree);
    else if (suite == "special-values") rep = suite_special_values(n, degree);
    else if (suite == "residue") rep = suite_residue(n, degree);
    else if (suite == "geometry") rep = suite_geometry(n);
    else if (suite == "lemmas") rep = suite_lemmas(n);
    else throw std::invalid_argument("unknown suite: " + suite);
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return rep;
}

}  // namespace adsfam
