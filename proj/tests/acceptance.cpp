// Acceptance gate: one line per criterion, exact checks only.
// Usage: acceptance [k]   (run only criterion k, 1-based)

#include <cstdio>
#include <cstdlib>
#include <string>

#include "adsfam/asymptotics.hpp"
#include "adsfam/families.hpp"
#include "adsfam/geometry.hpp"
#include "adsfam/lemmas.hpp"
#include "adsfam/suites.hpp"

using namespace adsfam;

namespace {

bool all_pass(const std::vector<RelationCheck>& checks) {
    for (const auto& rc : checks)
        if (!rc.pass) return false;
    return true;
}

bool crit_bracket_table() {
    for (int n = 4; n <= 7; ++n)
        if (!all_pass(LieContext(n).verify_bracket_table())) return false;
    return true;
}

bool crit_structure() {
    for (int n = 4; n <= 7; ++n) {
        LieContext g(n);
        if (g.dim() != n * (n + 1) / 2) return false;
        if (!g.verify_form_preservation()) return false;
    }
    for (int n : {4, 5})
        if (!LieContext(n).verify_jacobi()) return false;
    return true;
}

bool crit_equivariance() {
    for (int n : {4, 5, 6}) {
        LieContext big(n + 1);
        for (int order = 0; order <= 6; ++order) {
            UEAElement d = build_family(big, compute_coefficients(n, order));
            if (!all_pass(verify_equivariance(big, d, order))) return false;
        }
    }
    return true;
}

bool crit_uniqueness() {
    for (int n : {4, 5}) {
        LieContext big(n + 1);
        for (int order = 1; order <= 4; ++order) {
            UniquenessResult u = verify_uniqueness(big, order);
            if (u.dimension != 1 || !u.generator_matches_family) return false;
        }
    }
    return true;
}

bool crit_negative_controls() {
    for (auto [n, order] : {std::pair{4, 2}, std::pair{5, 4}}) {
        LieContext big(n + 1);
        if (!all_pass(negative_controls(big, order))) return false;
    }
    return true;
}

bool crit_parity() {
    for (int n : {4, 5}) {
        LieContext small(n), big(n + 1);
        for (int order = 0; order <= 5; ++order) {
            UEAElement d = build_family(big, compute_coefficients(n, order));
            if (!all_pass(verify_parity(small, big, d, order))) return false;
        }
    }
    return true;
}

bool crit_centralizer() {
    for (int n : {4, 5}) {
        LieContext ctx(n);
        for (int d : {2, 4}) {
            if (centralizer_dimension(ctx, d) != d / 2 + 1) return false;
            if (!laplacian_powers_centralize(ctx, d)) return false;
        }
    }
    return true;
}

bool crit_special_values() {
    for (int n : {4, 5, 6})
        for (int N : {1, 2, 3})
            if (!all_pass(verify_special_values(n, N))) return false;
    return true;
}

bool crit_asymptotics_oracle() {
    for (int n = 4; n <= 7; ++n) {
        auto ac = derive_recursion_oracle(n, 4);
        for (int j = 0; j <= 4; ++j) {
            if (!(ac.A[static_cast<size_t>(j)] == asymptotic_closed_form(n, j))) return false;
            if (j >= 1 && !verify_pole_structure(n, j)) return false;
        }
    }
    return true;
}

bool crit_coincidence() {
    // odd-order constants have no closed form; these are frozen outputs
    const std::map<std::pair<int, int>, std::string> pinned_odd = {
        {{4, 1}, "1"},          {{5, 1}, "1"},          {{6, 1}, "1"},
        {{4, 3}, "(-1/4)/(-1/2 + L)"}, {{5, 3}, "(-1/4)/(L)"}, {{6, 3}, "(-1/4)/(1/2 + L)"},
    };
    for (int n : {4, 5, 6})
        for (int order = 0; order <= 4; ++order) {
            CoincidenceResult r = verify_coincidence(n, order);
            if (!r.proportional || !r.matches_closed_form) return false;
            if (order % 2 == 1 && r.constant.str() != pinned_odd.at({n, order})) return false;
        }
    return true;
}

bool crit_geometry() {
    for (int n : {4, 5, 6})
        if (run_suite("geometry", n, 0).status != "pass") return false;
    return true;
}

bool crit_lemmas() {
    for (int n : {4, 5, 6}) {
        LieContext ctx(n), big(n + 1);
        for (int N = 1; N <= 4; ++N) {
            if (!power_commutator_diagonal(big, N)) return false;
            for (int r = 2; r <= big.n() - 3; ++r)
                if (!power_commutator_offdiagonal(big, N, r)) return false;
        }
        if (!laplacian_commutator_shape(ctx)) return false;
        for (int j = 1; j <= 4; ++j)
            if (!laplacian_power_commutator_shape(ctx, j)) return false;
    }
    return true;
}

struct Criterion {
    const char* name;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {"bracket table over all indices, n=4..7", crit_bracket_table},
    {"dimension, Jacobi, form preservation", crit_structure},
    {"equivariance identities, n=4..6, N=0..6", crit_equivariance},
    {"uniqueness of the solution space, n=4..5, N=1..4", crit_uniqueness},
    {"negative controls on perturbed coefficients", crit_negative_controls},
    {"parity under the embedded reflections, n=4..5, N=0..5", crit_parity},
    {"centralizer dimensions, n=4..5, degree 2 and 4", crit_centralizer},
    {"special values of the even families, n=4..6, N=1..3", crit_special_values},
    {"asymptotic recursion oracle, n=4..7, j<=4", crit_asymptotics_oracle},
    {"residue family coincidence, n=4..6, N=0..4", crit_coincidence},
    {"conformal embedding geometry round-trips", crit_geometry},
    {"commutator lemma regressions", crit_lemmas},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool ok = true;
    int k = 0;
    for (const auto& c : kCriteria) {
        ++k;
        if (only != 0 && k != only) continue;
        bool pass = false;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            std::printf("[%2d/12] %s: FAIL (exception: %s)\n", k, c.name, e.what());
            ok = false;
            continue;
        }
        std::printf("[%2d/12] %s: %s\n", k, c.name, pass ? "PASS" : "FAIL");
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}
