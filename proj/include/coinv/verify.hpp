#pragma once
// Exhaustive checks of the structural identities up to a size bound. The
// implementation lives in src/verify.cpp so the CLI and the acceptance binary
// share one compiled copy.

#include <string>
#include <vector>

#include "io.hpp"

namespace coinv {

struct VerifyEntry {
    std::string theorem;
    json params;
    bool pass = true;
    std::string detail;  // empty on success
};

struct VerifyReport {
    int max_n = 0;
    std::vector<VerifyEntry> entries;

    bool all_pass() const
    {
        for (auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::vector<std::string> theorems() const;  // distinct names, first-seen order
    json to_json() const;
    std::string text() const;
};

// Runs every family of checks with n <= max_n (1 <= max_n <= 6). The Groebner,
// Garsia-Stanton rank, Demazure and brute-force character checks stop at 5.
VerifyReport verify_suite(int max_n);

// Individual families, each appending to a report. Exposed for tests.
void verify_hilbert_series(VerifyReport& r, int max_n);
void verify_difference_count(VerifyReport& r, int max_n);
void verify_pascal_recursion(VerifyReport& r, int max_n);
void verify_artin_basis(VerifyReport& r, int max_n);
void verify_groebner(VerifyReport& r, int max_n);
void verify_reduced_demazure(VerifyReport& r, int max_n);
void verify_gs_basis(VerifyReport& r, int max_n);
void verify_psi_bijection(VerifyReport& r, int max_n);
void verify_demazure_identity(VerifyReport& r, int max_n);
void verify_dual_pieri(VerifyReport& r, int max_size);
void verify_graded_frobenius(VerifyReport& r, int max_n);
void verify_e_perp_recursion(VerifyReport& r, int max_n);
void verify_antisymmetrization(VerifyReport& r, int max_n);
void verify_mahonian(VerifyReport& r, int max_n);
void verify_straightening(VerifyReport& r, int max_n);

}  // namespace coinv
