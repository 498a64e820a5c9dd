#pragma once

#include "jordanlab/tseries.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace jordanlab {

/// Predicted dimensions a_n(D) = dim J_n(D) and b_n(D) = dim Inner_n J(D) for n = 1..N.
struct DimTable {
    int D = 0;
    int N = 0;
    std::vector<BigInt> a; // a[i] = a_{i+1}
    std::vector<BigInt> b; // b[i] = b_{i+1}; empty for the weakest form

    const BigInt& a_at(int n) const { return a.at(static_cast<std::size_t>(n - 1)); }
    const BigInt& b_at(int n) const { return b.at(static_cast<std::size_t>(n - 1)); }

    /// Degrees with a negative a_n or b_n (the conjecture predicts dimensions).
    std::vector<int> negative_degrees() const;
};

/// Phi = prod_{n<=N} (1 - z^n t)^{a_n} (1 - z^n/t)^{a_n} (1 - z^n)^{a_n + b_n}, truncated at z^N.
TSeries phi_product(const DimTable& tbl, int N);

/// Same product without the (1 - z^n)^{a_n + b_n} factors.
TSeries phi_product_without_center(const DimTable& tbl, int N);

/// psi = D z/t + (1 - D z) - t at truncation N.
TSeries psi_kernel(int D, int N);

/// Unique (a, b) with Res (1/t - 1) Phi dt = 1 and Res (1 - t) Phi dt = -D z through degree N.
DimTable solve_weak(int D, int N);

/// Unique a with Res psi * prod (1 - z^n (t + 1/t) + z^{2n})^{a_n} dt = 0 through degree N.
DimTable solve_weakest(int D, int N);

struct ReductionReport {
    bool same_sequences = false;
    bool full_product_residue_zero = false;
    bool reduced_product_residue_zero = false;
    bool weak_equations_hold = false;
    std::string detail;

    bool pass() const
    {
        return same_sequences && full_product_residue_zero && reduced_product_residue_zero && weak_equations_hold;
    }
};

/// Re-substitute a weak-form table into both residue equations.
bool weak_equations_hold(const DimTable& tbl, std::string* detail = nullptr);

ReductionReport verify_reduction(int D, int N);

/// JSON records {"form","D","N","a","b"} with decimal-string integers, one file per (form, D, N).
class DimCache {
public:
    /// Uses $JORDANLAB_CACHE_DIR when dir is empty; an empty result disables caching.
    explicit DimCache(std::filesystem::path dir = {});

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<DimTable> load(const std::string& form, int D, int N) const;
    void store(const std::string& form, const DimTable& tbl) const;

    /// Cached solve; form is "weak" or "weakest".
    DimTable solve(const std::string& form, int D, int N) const;

private:
    std::filesystem::path path_for(const std::string& form, int D, int N) const;
    std::filesystem::path dir_;
};

std::string dim_table_to_json(const std::string& form, const DimTable& tbl);
DimTable dim_table_from_json(const std::string& text, std::string* form = nullptr);

} // namespace jordanlab
