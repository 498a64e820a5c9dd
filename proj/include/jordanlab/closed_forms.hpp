#pragma once

#include "jordanlab/bigint.hpp"

#include <cstdint>

namespace jordanlab {

/// dim CJ_n(D): the reversal-fixed part of the degree-n tensors.
BigInt s(int n, int d);

/// dim Inner_n CJ(D); r(1, D) = 0.
BigInt r(int n, int d);

/// Number of oriented pairs of cyclic words of length n over D letters.
BigInt c(int n, int d);

/// Euler's totient.
std::int64_t totient(std::int64_t m);

/// Sum over i | n of totient(i) * D^(n/i).
BigInt necklace_sum(int n, int d);

struct WordCensus {
    int n = 0;
    int d = 0;
    BigInt words;            // D^n
    BigInt sigma_fixed;      // palindromes
    BigInt necklaces;        // words up to rotation
    BigInt reversal_fixed;   // necklaces equal to their own mirror image
    BigInt bracelets;        // words up to rotation and reversal
    BigInt oriented_pairs;   // necklaces - bracelets
};

/// Default cap on D^n for exhaustive enumeration.
inline constexpr std::int64_t kEnumerationBudget = 10'000'000;

/// Exhaustive enumeration by least-rotation representatives. Throws std::length_error past the budget.
WordCensus necklace_bracelet_bruteforce(int n, int d, std::int64_t budget = kEnumerationBudget);

} // namespace jordanlab
