#include "jordanlab/dim_solver.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jordanlab {

namespace {

const LaurentPoly& l0_kernel()
{
    static const LaurentPoly k = LaurentPoly::monomial(-1) - LaurentPoly(1); // 1/t - 1
    return k;
}

const LaurentPoly& l2_kernel()
{
    static const LaurentPoly k = LaurentPoly(1) - LaurentPoly::monomial(1); // 1 - t
    return k;
}

void require_table(const DimTable& tbl, int N, bool need_b)
{
    if (N < 0 || tbl.N < N || static_cast<int>(tbl.a.size()) < N || (need_b && static_cast<int>(tbl.b.size()) < N))
        throw std::invalid_argument("phi_product: table only populated through degree " + std::to_string(tbl.N) +
                                    ", requested " + std::to_string(N));
}

TSeries one_minus(int N, int zdeg, int texp)
{
    TSeries f = TSeries::one(N);
    if (zdeg <= N)
        f[zdeg].add_term(texp, -1);
    return f;
}

void check_solvable(const BigInt& coeff, const char* which)
{
    if (abs(coeff) != 1)
        throw std::logic_error(std::string("solver: unknown ") + which +
                               " enters its equation with coefficient " + to_string(coeff) + ", expected +-1");
}

bool residue_zero(const ZSeries& z, std::string* why, const char* label)
{
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] != 0) {
            if (why)
                *why += std::string(label) + ": nonzero residue at degree " + std::to_string(i) + "; ";
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<int> DimTable::negative_degrees() const
{
    std::vector<int> out;
    for (int n = 1; n <= N; ++n) {
        bool neg = a_at(n) < 0 || (static_cast<int>(b.size()) >= n && b_at(n) < 0);
        if (neg)
            out.push_back(n);
    }
    return out;
}

TSeries phi_product(const DimTable& tbl, int N)
{
    require_table(tbl, N, true);
    TSeries phi = TSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        const BigInt& an = tbl.a_at(n);
        phi = phi * series_pow(one_minus(N, n, 1), an);
        phi = phi * series_pow(one_minus(N, n, -1), an);
        phi = phi * series_pow(one_minus(N, n, 0), an + tbl.b_at(n));
    }
    return phi;
}

TSeries phi_product_without_center(const DimTable& tbl, int N)
{
    require_table(tbl, N, false);
    TSeries phi = TSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        const BigInt& an = tbl.a_at(n);
        phi = phi * series_pow(one_minus(N, n, 1), an);
        phi = phi * series_pow(one_minus(N, n, -1), an);
    }
    return phi;
}

TSeries psi_kernel(int D, int N)
{
    TSeries psi(N);
    psi[0] = LaurentPoly(1) - LaurentPoly::monomial(1);
    if (N >= 1)
        psi[1] = LaurentPoly::monomial(-1, D) - LaurentPoly(D);
    return psi;
}

DimTable solve_weak(int D, int N)
{
    if (D < 1 || N < 1)
        throw std::invalid_argument("solve_weak: need D >= 1 and N >= 1");

    // New degree-n factors contribute -a(t + 1/t) - (a + b) at z^n to first order.
    const LaurentPoly delta_a = -LaurentPoly::irreducible(1);
    const LaurentPoly delta_b = LaurentPoly(-1);
    const BigInt l2_a = residue(l2_kernel() * delta_a), l2_b = residue(l2_kernel() * delta_b);
    const BigInt l0_a = residue(l0_kernel() * delta_a), l0_b = residue(l0_kernel() * delta_b);
    if (l2_b != 0)
        throw std::logic_error("solve_weak: L(2)-equation is not triangular in b");
    check_solvable(l2_a, "a_n");
    check_solvable(l0_b, "b_n");

    DimTable tbl;
    tbl.D = D;
    tbl.N = N;
    TSeries phi = TSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        const BigInt l2_now = residue(l2_kernel() * phi[n]);
        const BigInt l0_now = residue(l0_kernel() * phi[n]);
        const BigInt l2_target = n == 1 ? BigInt(-D) : BigInt(0);
        const BigInt l0_target = 0;

        BigInt an = (l2_target - l2_now) / l2_a;
        BigInt bn = (l0_target - l0_now - l0_a * an) / l0_b;
        tbl.a.push_back(an);
        tbl.b.push_back(bn);

        phi = phi * binomial_factor(N, n, 1, an);
        phi = phi * binomial_factor(N, n, -1, an);
        phi = phi * binomial_factor(N, n, 0, an + bn);

        if (residue(l2_kernel() * phi[n]) != l2_target || residue(l0_kernel() * phi[n]) != l0_target)
            throw std::logic_error("solve_weak: degree " + std::to_string(n) + " equations not satisfied after update");
    }
    return tbl;
}

DimTable solve_weakest(int D, int N)
{
    if (D < 1 || N < 1)
        throw std::invalid_argument("solve_weakest: need D >= 1 and N >= 1");

    const TSeries psi = psi_kernel(D, N);
    // The unknown a_n enters at z^n as -a_n (t + 1/t); only psi's z^0 part meets it.
    const LaurentPoly delta_a = -(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
    const BigInt coeff = residue(psi[0] * delta_a);
    check_solvable(coeff, "a_n");

    DimTable tbl;
    tbl.D = D;
    tbl.N = N;
    TSeries prod = TSeries::one(N);
    auto equation_at = [&](int n) {
        BigInt e = 0;
        for (int k = 0; k <= std::min(n, 1); ++k)
            e += residue(psi[k] * prod[n - k]);
        return e;
    };
    for (int n = 1; n <= N; ++n) {
        BigInt an = -equation_at(n) / coeff;
        tbl.a.push_back(an);
        prod = prod * binomial_factor(N, n, 1, an);
        prod = prod * binomial_factor(N, n, -1, an);
        if (equation_at(n) != 0)
            throw std::logic_error("solve_weakest: degree " + std::to_string(n) + " equation not satisfied after update");
    }
    return tbl;
}

bool weak_equations_hold(const DimTable& tbl, std::string* detail)
{
    const TSeries phi = phi_product(tbl, tbl.N);
    const ZSeries l0 = residue(phi.times_t(l0_kernel()));
    const ZSeries l2 = residue(phi.times_t(l2_kernel()));
    bool ok = true;
    for (int n = 0; n <= tbl.N; ++n) {
        const BigInt want0 = n == 0 ? 1 : 0;
        const BigInt want2 = n == 1 ? BigInt(-tbl.D) : BigInt(0);
        if (l0[static_cast<std::size_t>(n)] != want0 || l2[static_cast<std::size_t>(n)] != want2) {
            ok = false;
            if (detail)
                *detail += "residue equations fail at degree " + std::to_string(n) + "; ";
        }
    }
    return ok;
}

ReductionReport verify_reduction(int D, int N)
{
    ReductionReport rep;
    const DimTable weak = solve_weak(D, N);
    const DimTable weakest = solve_weakest(D, N);
    rep.same_sequences = weak.a == weakest.a;
    if (!rep.same_sequences)
        rep.detail += "weak and weakest a-sequences differ; ";
    const TSeries psi = psi_kernel(D, N);
    rep.full_product_residue_zero = residue_zero(residue(psi * phi_product(weak, N)), &rep.detail, "full product");
    rep.reduced_product_residue_zero =
        residue_zero(residue(psi * phi_product_without_center(weak, N)), &rep.detail, "reduced product");
    rep.weak_equations_hold = weak_equations_hold(weak, &rep.detail);
    return rep;
}

// ---------------------------------------------------------------------------------------------
// cache

std::string dim_table_to_json(const std::string& form, const DimTable& tbl)
{
    nlohmann::json j;
    j["form"] = form;
    j["D"] = tbl.D;
    j["N"] = tbl.N;
    j["a"] = nlohmann::json::array();
    j["b"] = nlohmann::json::array();
    for (const auto& v : tbl.a)
        j["a"].push_back(to_string(v));
    for (const auto& v : tbl.b)
        j["b"].push_back(to_string(v));
    return j.dump();
}

DimTable dim_table_from_json(const std::string& text, std::string* form)
{
    const auto j = nlohmann::json::parse(text);
    DimTable tbl;
    tbl.D = j.at("D").get<int>();
    tbl.N = j.at("N").get<int>();
    for (const auto& v : j.at("a"))
        tbl.a.emplace_back(v.get<std::string>(), 10);
    for (const auto& v : j.at("b"))
        tbl.b.emplace_back(v.get<std::string>(), 10);
    if (static_cast<int>(tbl.a.size()) != tbl.N || (!tbl.b.empty() && static_cast<int>(tbl.b.size()) != tbl.N))
        throw std::runtime_error("dim cache: record length does not match N");
    if (form)
        *form = j.at("form").get<std::string>();
    return tbl;
}

DimCache::DimCache(std::filesystem::path dir) : dir_(std::move(dir))
{
    if (dir_.empty()) {
        if (const char* env = std::getenv("JORDANLAB_CACHE_DIR"); env && *env)
            dir_ = env;
    }
}

std::filesystem::path DimCache::path_for(const std::string& form, int D, int N) const
{
    return dir_ / (form + "_D" + std::to_string(D) + "_N" + std::to_string(N) + ".json");
}

std::optional<DimTable> DimCache::load(const std::string& form, int D, int N) const
{
    if (!enabled())
        return std::nullopt;
    std::ifstream in(path_for(form, D, N));
    if (!in)
        return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    std::string stored_form;
    DimTable tbl = dim_table_from_json(ss.str(), &stored_form);
    if (stored_form != form || tbl.D != D || tbl.N != N)
        return std::nullopt;
    return tbl;
}

void DimCache::store(const std::string& form, const DimTable& tbl) const
{
    if (!enabled())
        return;
    std::filesystem::create_directories(dir_);
    const auto target = path_for(form, tbl.D, tbl.N);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << dim_table_to_json(form, tbl) << "\n";
    }
    std::filesystem::rename(tmp, target);
}

DimTable DimCache::solve(const std::string& form, int D, int N) const
{
    if (form != "weak" && form != "weakest")
        throw std::invalid_argument("unknown form '" + form + "' (expected weak or weakest)");
    if (auto hit = load(form, D, N))
        return *hit;
    DimTable tbl = form == "weak" ? solve_weak(D, N) : solve_weakest(D, N);
    store(form, tbl);
    return tbl;
}

} // namespace jordanlab
