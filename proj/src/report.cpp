#include "jordanlab/report.hpp"

#include "jordanlab/closed_forms.hpp"
#include "jordanlab/jordan_oracle.hpp"
#include "jordanlab/partition_kit.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace jordanlab {

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    if (s == "md")
        return Format::md;
    throw std::invalid_argument("unknown format: " + s);
}

std::string status_str(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::report_only:
        return "report-only";
    }
    return "?";
}

std::string source_str(Source s)
{
    switch (s) {
    case Source::published:
        return "published";
    case Source::derived:
        return "derived";
    case Source::trivial:
        return "trivial";
    }
    return "?";
}

namespace {

using Results = std::vector<VerificationResult>;
using Task = std::function<Results()>;

struct Collector {
    std::string suite;
    Results out;

    void check(const std::string& id, const std::string& expected, const std::string& computed, Source src)
    {
        out.push_back({suite, id, expected, computed, src, expected == computed ? Status::pass : Status::fail, ""});
    }
    void check(const std::string& id, const BigInt& expected, const BigInt& computed, Source src)
    {
        check(id, to_string(expected), to_string(computed), src);
    }
    void flag(const std::string& id, bool ok, Source src)
    {
        check(id, "true", ok ? "true" : "false", src);
    }
    void report(const std::string& id, const std::string& expected, const std::string& computed, Source src,
                const std::string& note)
    {
        out.push_back({suite, id, expected, computed, src, Status::report_only, note});
    }
};

std::string case_id(int d, int n, const std::string& quantity)
{
    return "D=" + std::to_string(d) + " n=" + std::to_string(n) + " " + quantity;
}

BigInt from_size(std::size_t v) { return BigInt(std::to_string(v)); }

int cap(const VerifyOptions& o, int n) { return o.n_max > 0 ? std::min(o.n_max, n) : n; }

DimTable weak_table(const VerifyOptions& o, int d, int n) { return o.cache.solve("weak", d, n); }

std::vector<Task> table_tasks(const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    if (opts.d_max >= 1)
        tasks.push_back([&opts] {
            Collector c{"paper-tables", {}};
            const int N = cap(opts, 30);
            const DimTable t = weak_table(opts, 1, N);
            for (int n = 1; n <= N; ++n) {
                c.check(case_id(1, n, "a"), BigInt(1), t.a_at(n), Source::published);
                c.check(case_id(1, n, "b"), BigInt(0), t.b_at(n), Source::published);
            }
            return c.out;
        });
    if (opts.d_max >= 2)
        tasks.push_back([&opts] {
            Collector c{"paper-tables", {}};
            const int N = cap(opts, 15);
            const DimTable t = weak_table(opts, 2, N);
            for (int n = 1; n <= N; ++n) {
                c.check(case_id(2, n, "a - s"), BigInt(0), BigInt(t.a_at(n) - s(n, 2)), Source::published);
                c.check(case_id(2, n, "b - r"), BigInt(0), BigInt(t.b_at(n) - r(n, 2)), Source::published);
            }
            if (N >= 4)
                c.check(case_id(2, 4, "a"), BigInt(10), t.a_at(4), Source::derived);
            if (N >= 15) {
                c.check(case_id(2, 15, "a"), BigInt(16512), t.a_at(15), Source::derived);
                c.check(case_id(2, 15, "b"), BigInt(15288), t.b_at(15), Source::derived);
            }
            return c.out;
        });
    if (opts.d_max >= 3)
        tasks.push_back([&opts] {
            Collector c{"paper-tables", {}};
            const int N = cap(opts, 8);
            const DimTable t = weak_table(opts, 3, N);
            for (int n = 1; n <= N; ++n) {
                c.check(case_id(3, n, "a - s"), BigInt(n == 8 ? 3 : 0), BigInt(t.a_at(n) - s(n, 3)), Source::published);
                c.check(case_id(3, n, "b - r"), BigInt(0), BigInt(t.b_at(n) - r(n, 3)), Source::published);
            }
            if (N >= 8)
                c.check(case_id(3, 8, "a"), BigInt(3324), t.a_at(8), Source::published);
            return c.out;
        });
    if (opts.d_max >= 4)
        tasks.push_back([&opts] {
            Collector c{"paper-tables", {}};
            const int N = cap(opts, 7);
            const DimTable t = weak_table(opts, 4, N);
            const long a_off[] = {0, 0, 0, -1, -4, -20, -60};
            const long b_off[] = {0, 0, 0, 0, -4, -16, -80};
            for (int n = 1; n <= N; ++n) {
                c.check(case_id(4, n, "a - s"), BigInt(a_off[n - 1]), BigInt(t.a_at(n) - s(n, 4)), Source::published);
                c.check(case_id(4, n, "b - r"), BigInt(b_off[n - 1]), BigInt(t.b_at(n) - r(n, 4)), Source::published);
            }
            return c.out;
        });
    for (int d = 1; d <= std::min(4, opts.d_max); ++d)
        tasks.push_back([&opts, d] {
            Collector c{"paper-tables", {}};
            const int N = cap(opts, 20);
            const ReductionReport rep = verify_reduction(d, N);
            c.check(case_id(d, N, "weakest a = weak a"), "true", rep.same_sequences ? "true" : "false",
                    Source::published);
            c.flag(case_id(d, N, "weak equations after substitution"), rep.weak_equations_hold, Source::derived);
            c.flag(case_id(d, N, "weakest residue vanishes"),
                   rep.full_product_residue_zero && rep.reduced_product_residue_zero, Source::derived);
            return c.out;
        });
    for (int d = 1; d <= std::min(4, opts.d_max); ++d)
        tasks.push_back([&opts, d] {
            Collector c{"paper-tables", {}};
            const int N = cap(opts, 7);
            const ConjectureTables t = solve_characters(d, N);
            std::string detail;
            const bool resub = check_resubstitution(t, &detail);
            c.check(case_id(d, N, "character re-substitution"), "true", resub ? "true" : "false: " + detail,
                    Source::published);
            const DimTable spec = t.specialized();
            const DimTable weak = weak_table(opts, d, N);
            c.flag(case_id(d, N, "specialization equals scalar table"), spec.a == weak.a && spec.b == weak.b,
                   Source::derived);
            for (const DegreeComparison& deg : predicted_vs_oracle(t).degrees)
                c.check(case_id(d, deg.degree, "A = ch CJ - ch M"), schur_row_str(deg.expected),
                        schur_row_str(deg.predicted), Source::published);
            const auto neg = t.non_effective();
            std::string joined;
            for (const auto& s : neg)
                joined += (joined.empty() ? "" : " ") + s;
            c.report(case_id(d, N, "negative Schur coefficients"), "none", neg.empty() ? "none" : joined,
                     Source::derived, "effectivity is conjectural");
            return c.out;
        });
    if (opts.d_max >= 3 && (opts.n_max == 0 || opts.n_max >= 8))
        tasks.push_back([] {
            Collector c{"paper-tables", {}};
            const ConjectureTables t = solve_characters(3, 8);
            c.report(case_id(3, 8, "A - ch CJ (special identities)"), schur_row_str({{Partition{3, 3, 2}, BigInt(1)}}),
                     schur_row_str(special_identity_excess(t, 8)), Source::published,
                     "conjectural; the sign follows from a_8(3) - s_8(3) = +3");
            return c.out;
        });
    return tasks;
}

std::vector<Task> oracle_tasks(const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    auto full_degree = [&opts](int d, int n_top) {
        return [&opts, d, n_top] {
            Collector c{"oracle-cross", {}};
            JordanOracle o(d);
            for (int n = 1; n <= cap(opts, n_top); ++n) {
                const std::size_t sj = o.dim(OracleSpace::SJ, n), cj = o.dim(OracleSpace::CJ, n);
                const std::size_t icj = o.dim(OracleSpace::InnerCJ, n);
                c.check(case_id(d, n, "dim CJ"), s(n, d), from_size(cj), Source::published);
                c.check(case_id(d, n, "dim Inner CJ"), r(n, d), from_size(icj), Source::published);
                if (n <= 7) {
                    const std::size_t isj = o.dim(OracleSpace::InnerSJ, n);
                    c.check(case_id(d, n, "dim SJ"), BigInt(s(n, d) - closed_dim_M(n, d)), from_size(sj),
                            Source::published);
                    c.check(case_id(d, n, "dim MD"), closed_dim_MD(n, d), BigInt(from_size(icj) - from_size(isj)),
                            Source::published);
                }
            }
            return c.out;
        };
    };
    for (int d = 1; d <= std::min(3, opts.d_max); ++d)
        tasks.push_back(full_degree(d, d == 3 ? 8 : 7));
    if (opts.d_max >= 4)
        tasks.push_back(full_degree(4, 6));

    for (int d = 1; d <= 7; ++d)
        tasks.push_back([d] {
            Collector c{"oracle-cross", {}};
            JordanOracle o(d);
            const Multidegree m = multilinear(d);
            const std::size_t sj = o.dim(OracleSpace::SJ, m), cj = o.dim(OracleSpace::CJ, m);
            const BigInt words = factorial(static_cast<unsigned long>(d));
            c.check("multilinear D=" + std::to_string(d) + " dim CJ", d == 1 ? BigInt(1) : BigInt(words / 2),
                    from_size(cj), Source::trivial);
            const BigInt m_dim = d <= 3 ? BigInt(0) : known_m_class(d).dimension();
            c.check("multilinear D=" + std::to_string(d) + " dim SJ", BigInt(from_size(cj) - m_dim), from_size(sj),
                    Source::derived);
            if (d == 6 || d == 7) {
                c.check("multilinear D=" + std::to_string(d) + " dim SJ (reference)", BigInt(d == 6 ? 330 : 2345),
                        from_size(sj), Source::published);
                c.check("multilinear D=" + std::to_string(d) + " dim M (reference)", BigInt(d == 6 ? 30 : 175),
                        BigInt(from_size(cj) - from_size(sj)), Source::published);
            }
            const std::size_t icj = o.dim(OracleSpace::InnerCJ, m), isj = o.dim(OracleSpace::InnerSJ, m);
            const BigInt md = d <= 4 ? BigInt(0) : md_class_from_m(known_m_class(d - 1)).dimension();
            c.check("multilinear D=" + std::to_string(d) + " dim MD", md, BigInt(from_size(icj) - from_size(isj)),
                    Source::published);
            return c.out;
        });

    for (int d = 1; d <= std::min(4, opts.d_max); ++d)
        tasks.push_back([&opts, d] {
            Collector c{"oracle-cross", {}};
            JordanOracle o(d);
            for (int n = 1; n <= cap(opts, 6); ++n) {
                const CharClass cj = weights_to_char(weight_character(o.basis(OracleSpace::CJ, n), d), d, n);
                c.check(case_id(d, n, "weights of CJ = ch CJ"), char_CJ(n, d).str(), cj.str(), Source::derived);
                const CharClass sj = weights_to_char(weight_character(o.basis(OracleSpace::SJ, n), d), d, n);
                c.check(case_id(d, n, "weights of SJ = ch CJ - ch M"), (char_CJ(n, d) - char_M(n, d)).str(), sj.str(),
                        Source::derived);
            }
            return c.out;
        });

    tasks.push_back([] {
        Collector c{"oracle-cross", {}};
        JordanOracle o3(3);
        c.flag(case_id(3, 5, "Inner SJ within Inner CJ"),
               o3.basis(OracleSpace::InnerCJ, 5).contains(o3.basis(OracleSpace::InnerSJ, 5)), Source::trivial);
        JordanOracle o5(5);
        const Multidegree m = multilinear(5);
        c.flag("multilinear D=5 Inner SJ within Inner CJ",
               o5.basis(OracleSpace::InnerCJ, m).contains(o5.basis(OracleSpace::InnerSJ, m)), Source::trivial);
        c.flag("multilinear D=5 SJ within CJ", o5.basis(OracleSpace::CJ, m).contains(o5.basis(OracleSpace::SJ, m)),
               Source::trivial);
        return c.out;
    });
    return tasks;
}

std::vector<Task> branching_tasks()
{
    return {[] {
        Collector c{"branching", {}};
        const std::pair<Partition, long> hooks[] = {{Partition{3, 1, 1, 1, 1}, 15}, {Partition{2, 2, 1, 1, 1}, 14},
                                                    {Partition{4, 1, 1, 1, 1}, 35}, {Partition{3, 2, 1, 1, 1}, 64},
                                                    {Partition{2, 2, 1, 1, 1, 1}, 20}, {Partition{3, 1, 1, 1, 1, 1}, 21}};
        for (const auto& [y, dim] : hooks)
            c.check("dim S(" + y.str() + ")", BigInt(dim), dim_sn(y), Source::published);

        const VirtualSymClass m7 = known_m_class(7);
        c.check("dim M(7) = 2*35+64+20+21", BigInt(175), m7.dimension(), Source::published);

        VirtualSymClass res_expected(7, {{Partition{3, 1, 1, 1, 1}, 4},
                                         {Partition{2, 1, 1, 1, 1, 1}, 2},
                                         {Partition{2, 2, 1, 1, 1}, 2},
                                         {Partition{4, 1, 1, 1}, 2},
                                         {Partition{3, 2, 1, 1}, 1}});
        c.check("Res[M(7)]", res_expected.str(), restrict(m7).str(), Source::published);

        VirtualSymClass ind_res(7, {{Partition{3, 1, 1, 1, 1}, 2},
                                    {Partition{2, 1, 1, 1, 1, 1}, 1},
                                    {Partition{2, 2, 1, 1, 1}, 1},
                                    {Partition{4, 1, 1, 1}, 1},
                                    {Partition{3, 2, 1, 1}, 1}});
        VirtualSymClass k1(7, {{Partition{3, 1, 1, 1, 1}, 1}});
        c.check("Ind Res [3,1,1,1,1]", ind_res.str(), induce(restrict(k1)).str(), Source::published);

        const VirtualSymClass md7 = md_class_from_m(known_m_class(6));
        VirtualSymClass md7_expected(7, {{Partition{2, 1, 1, 1, 1, 1}, 2},
                                         {Partition{2, 2, 1, 1, 1}, 2},
                                         {Partition{3, 1, 1, 1, 1}, 2},
                                         {Partition{3, 2, 1, 1}, 2},
                                         {Partition{4, 1, 1, 1}, 2}});
        c.check("[MD(7)]", md7_expected.str(), md7.str(), Source::published);
        c.check("dim MD(7)", BigInt(180), md7.dimension(), Source::derived);

        const VirtualSymClass md8 = md_class_from_m(m7);
        c.check("dim MD(8)", BigInt(1225), md8.dimension(), Source::derived);
        c.report("[MD(8)] against the reference list", reference_md8_class().str(), md8.str(), Source::published,
                 "reference list repeats [2,1^6] and contains the non-diagram 2^2,4");

        VirtualSymClass md5(5, {{Partition{2, 1, 1, 1}, 1}});
        c.check("[MD(5)] from [M(4)]", md5.str(), md_class_from_m(known_m_class(4)).str(), Source::published);

        bool ind_ok = true, res_ok = true;
        for (int n = 1; n <= 7; ++n)
            for (const Partition& y : partitions_of(n)) {
                VirtualSymClass single(n);
                single.add(y, 1);
                ind_ok = ind_ok && induce(single).dimension() == BigInt(n + 1) * dim_sn(y);
                res_ok = res_ok && (n == 1 || restrict(single).dimension() == dim_sn(y));
            }
        c.flag("dim Ind Y = (n+1) dim Y, |Y| <= 7", ind_ok, Source::derived);
        c.flag("dim Res Y = dim Y, |Y| <= 7", res_ok, Source::trivial);

        for (int d = 4; d <= 7; ++d) {
            const VirtualSymClass cm = known_m_class(d);
            const VirtualSymClass md = md_class_from_m(cm);
            c.check("dim [MD(" + std::to_string(d + 1) + ")] = D dim [M(" + std::to_string(d) + ")]",
                    BigInt(d * cm.dimension()), md.dimension(), Source::derived);
            const C1Report rep = check_c1_constraint(cm, d);
            std::string detail;
            for (const auto& v : rep.violations)
                detail += (detail.empty() ? "" : "; ") + v;
            c.check("column constraint on [M(" + std::to_string(d) + ")]", "no violations",
                    rep.pass ? "no violations" : detail, Source::published);
        }
        return c.out;
    }};
}

std::vector<Task> jacobi_tasks()
{
    return {[] {
        Collector c{"jacobi", {}};
        for (int N : {0, 50}) {
            const JacobiReport rep = jacobi_triple_check(N);
            c.flag("N=" + std::to_string(N) + " product = sum", rep.product_equals_sum, Source::published);
            c.flag("N=" + std::to_string(N) + " Res (1/t - 1) Phi = 1", rep.residue_l0, Source::published);
            c.flag("N=" + std::to_string(N) + " Res (1 - t) Phi = -z", rep.residue_l2, Source::published);
        }
        return c.out;
    }};
}

Results run_tasks(const std::vector<Task>& tasks, unsigned threads)
{
    std::vector<Results> slots(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                slots[i] = tasks[i]();
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    Results out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!errors[i].empty())
            out.push_back({"error", "task " + std::to_string(i), "no exception", errors[i], Source::trivial,
                           Status::fail, ""});
        out.insert(out.end(), slots[i].begin(), slots[i].end());
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string md_field(std::string s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '|')
            out += '\\';
        out += ch;
    }
    return out;
}

std::string emit_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                       Format f)
{
    std::ostringstream os;
    if (f == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < header.size(); ++i)
                obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        os << arr.dump(2) << '\n';
    } else if (f == Format::csv) {
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << csv_field(header[i]);
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_field(row[i]);
            os << '\n';
        }
    } else {
        os << '|';
        for (const auto& h : header)
            os << ' ' << md_field(h) << " |";
        os << "\n|";
        for (std::size_t i = 0; i < header.size(); ++i)
            os << "---|";
        os << '\n';
        for (const auto& row : rows) {
            os << '|';
            for (const auto& cell : row)
                os << ' ' << md_field(cell) << " |";
            os << '\n';
        }
    }
    return os.str();
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"paper-tables", "oracle-cross", "branching", "jacobi", "all"};
    return names;
}

std::vector<VerificationResult> run_suite(const std::string& suite, const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    auto append = [&](std::vector<Task> more) { tasks.insert(tasks.end(), more.begin(), more.end()); };
    if (suite == "paper-tables" || suite == "all")
        append(table_tasks(opts));
    if (suite == "oracle-cross" || suite == "all")
        append(oracle_tasks(opts));
    if (suite == "branching" || suite == "all")
        append(branching_tasks());
    if (suite == "jacobi" || suite == "all")
        append(jacobi_tasks());
    if (tasks.empty())
        throw std::invalid_argument("unknown suite: " + suite);
    return run_tasks(tasks, opts.threads);
}

std::size_t count_failures(const std::vector<VerificationResult>& results)
{
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return r.status == Status::fail; }));
}

std::string format_report(const std::vector<VerificationResult>& results, Format f)
{
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results)
        rows.push_back({r.suite, r.case_id, r.expected, r.computed, source_str(r.source), status_str(r.status), r.note});
    std::string out = emit_table({"suite", "case", "expected", "computed", "source", "status", "note"}, rows, f);
    if (f == Format::md) {
        const std::size_t fails = count_failures(results);
        const auto reports = static_cast<std::size_t>(std::count_if(
            results.begin(), results.end(), [](const auto& r) { return r.status == Status::report_only; }));
        out += "\n" + std::to_string(results.size() - fails - reports) + " passed, " + std::to_string(fails) +
               " failed, " + std::to_string(reports) + " report-only\n";
    }
    return out;
}

std::string format_dims(const std::string& form, const DimTable& tbl, Format f)
{
    if (f == Format::json)
        return dim_table_to_json(form, tbl) + "\n";
    const bool weak = !tbl.b.empty();
    std::vector<std::string> header{"n", "a_n"};
    if (weak)
        header.push_back("b_n");
    std::vector<std::vector<std::string>> rows;
    for (int n = 1; n <= tbl.N; ++n) {
        std::vector<std::string> row{std::to_string(n), to_string(tbl.a_at(n))};
        if (weak)
            row.push_back(to_string(tbl.b_at(n)));
        rows.push_back(row);
    }
    return emit_table(header, rows, f);
}

namespace {

std::vector<std::pair<std::string, std::string>> class_row(const CharClass& cls, const SchurRow& schur,
                                                          CharBasis basis, int n)
{
    std::vector<std::pair<std::string, std::string>> out;
    if (basis == CharBasis::schur) {
        for (auto it = schur.rbegin(); it != schur.rend(); ++it)
            out.emplace_back(it->first.str(), to_string(it->second));
    } else {
        const auto terms = cls.degree_part(n).terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            out.emplace_back(it->first.str(), to_string(it->second.coeff(0)));
    }
    return out;
}

} // namespace

std::string format_chars(const ConjectureTables& t, CharBasis basis, Format f)
{
    const std::string key = basis == CharBasis::schur ? "schur" : "monomial";
    const DimTable dims = t.specialized();
    if (f == Format::json) {
        nlohmann::ordered_json j;
        j["D"] = t.D;
        j["N"] = t.N;
        for (const char* which : {"A", "B"}) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (int n = 1; n <= t.N; ++n) {
                const bool a = which[0] == 'A';
                nlohmann::ordered_json row;
                row["degree"] = n;
                nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
                for (const auto& [y, k] : class_row(a ? t.A : t.B, a ? t.A_at(n) : t.B_at(n), basis, n))
                    coeffs[y] = nlohmann::ordered_json::parse(k);
                row[key] = coeffs;
                row["dimension"] = nlohmann::ordered_json::parse(to_string(a ? dims.a_at(n) : dims.b_at(n)));
                arr.push_back(row);
            }
            j[which] = arr;
        }
        return j.dump(2) + "\n";
    }
    auto joined = [](const std::vector<std::pair<std::string, std::string>>& m) {
        std::string s;
        for (const auto& [y, k] : m)
            s += (s.empty() ? "" : " + ") + (k == "1" ? "" : k + "*") + "[" + y + "]";
        return s.empty() ? std::string("0") : s;
    };
    std::vector<std::vector<std::string>> rows;
    if (f == Format::csv) {
        for (int n = 1; n <= t.N; ++n)
            for (const char* which : {"A", "B"}) {
                const bool a = which[0] == 'A';
                for (const auto& [y, k] : class_row(a ? t.A : t.B, a ? t.A_at(n) : t.B_at(n), basis, n))
                    rows.push_back({std::to_string(n), which, y, k});
            }
        return emit_table({"degree", "class", "partition", "coefficient"}, rows, f);
    }
    for (int n = 1; n <= t.N; ++n)
        rows.push_back({std::to_string(n), joined(class_row(t.A, t.A_at(n), basis, n)), to_string(dims.a_at(n)),
                        joined(class_row(t.B, t.B_at(n), basis, n)), to_string(dims.b_at(n))});
    return emit_table({"n", "A_n", "dim A_n", "B_n", "dim B_n"}, rows, f);
}

std::string format_closed(int d, int n_max, Format f)
{
    std::vector<std::vector<std::string>> rows;
    for (int n = 1; n <= n_max; ++n)
        rows.push_back({std::to_string(n), to_string(s(n, d)), to_string(r(n, d)), to_string(c(n, d)),
                        n <= 7 ? to_string(closed_dim_M(n, d)) : "", n <= 7 ? to_string(closed_dim_MD(n, d)) : ""});
    return emit_table({"n", "s_n", "r_n", "c_n", "dim M_n", "dim MD_n"}, rows, f);
}

std::vector<OracleRow> oracle_table(int d, int n_max)
{
    JordanOracle o(d);
    std::vector<OracleRow> rows;
    for (int n = 1; n <= n_max; ++n)
        rows.push_back({n, o.dim(OracleSpace::SJ, n), o.dim(OracleSpace::CJ, n), o.dim(OracleSpace::InnerCJ, n),
                        o.dim(OracleSpace::InnerSJ, n)});
    return rows;
}

OracleRow oracle_multilinear(int d)
{
    JordanOracle o(d);
    const Multidegree m = multilinear(d);
    return {d, o.dim(OracleSpace::SJ, m), o.dim(OracleSpace::CJ, m), o.dim(OracleSpace::InnerCJ, m),
            o.dim(OracleSpace::InnerSJ, m)};
}

std::string format_oracle(const std::vector<OracleRow>& rows, Format f)
{
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows)
        out.push_back({std::to_string(r.n), std::to_string(r.sj), std::to_string(r.cj), std::to_string(r.cj - r.sj),
                       std::to_string(r.inner_cj), std::to_string(r.inner_sj), std::to_string(r.inner_cj - r.inner_sj)});
    return emit_table({"n", "dim SJ", "dim CJ", "dim M", "dim Inner CJ", "dim Inner SJ", "dim MD"}, out, f);
}

} // namespace jordanlab
