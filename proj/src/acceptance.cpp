#include <wronq/acceptance.hpp>

#include <wronq/characters.hpp>
#include <wronq/errors.hpp>
#include <wronq/modforms.hpp>
#include <wronq/modp.hpp>
#include <wronq/roots.hpp>
#include <wronq/wronskian.hpp>

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace wronq::acceptance {

namespace {

template <typename Item, typename F>
void parallel_for(const std::vector<Item>& items, unsigned threads, F&& f) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || items.size() <= 1) {
        for (const auto& it : items) f(it);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            f(items[i]);
        }
    };
    std::vector<std::thread> pool;
    std::size_t count = std::min<std::size_t>(threads, items.size());
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Collects per-item failures from concurrent checks.
class FailureLog {
public:
    void add(const std::string& what) {
        std::lock_guard<std::mutex> lock(mu_);
        items_.push_back(what);
    }
    bool empty() const { return items_.empty(); }
    std::string summary(const std::string& ok) const {
        if (items_.empty()) return ok;
        std::string out = items_.front();
        for (std::size_t i = 1; i < items_.size() && i < 4; ++i) out += "; " + items_[i];
        if (items_.size() > 4) out += "; +" + std::to_string(items_.size() - 4) + " more";
        return out;
    }

private:
    mutable std::mutex mu_;
    std::vector<std::string> items_;
};

template <typename Body>
CriterionResult run_criterion(int number, const std::string& name, bool gating, Body&& body) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    r.gating = gating;
    auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = body();
        r.pass = pass;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// |a - b| <= 1 in the last printed digit, both strings at the same decimal
// layout (the criterion's final-digit rounding tolerance).
bool within_final_digit(const std::string& a, const std::string& b) {
    auto dot_a = a.find('.'), dot_b = b.find('.');
    if (dot_a != dot_b || a.size() != b.size()) return false;
    std::string da = a, db = b;
    if (dot_a != std::string::npos) {
        da.erase(dot_a, 1);
        db.erase(dot_b, 1);
    }
    long long va = std::stoll(da), vb = std::stoll(db);
    return va - vb <= 1 && vb - va <= 1;
}

QSeries pentagonal_sum(long terms) {
    std::vector<std::pair<long long, Rat>> t;
    for (long long k = -2 * terms - 4; k <= 2 * terms + 4; ++k) {
        long long n = 6 * k + 1;
        if (n * n < 24 * terms + 1) t.emplace_back(n * n, Rat((k % 2 == 0) ? 1 : -1));
    }
    return QSeries::from_terms(24, std::move(t), make_rat(1, 24) + terms);
}

QSeries jacobi_cube_sum(long terms) {
    std::vector<std::pair<long long, Rat>> t;
    for (long long n = 0;; ++n) {
        long long m = 2 * n + 1;
        if (3 * m * m >= 24 * terms + 3) break;
        t.emplace_back(3 * m * m, to_rat((n % 2 == 0) ? m : -m));
    }
    return QSeries::from_terms(24, std::move(t), make_rat(3, 24) + terms);
}

struct TableRow {
    WronskianResult res;
    std::optional<Decomposition> dec;
};

// exact determinant of a small integer matrix (basis-change validity)
long long int_det(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    long long acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long> row;
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        long long term = m[0][j] * int_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

std::vector<CriterionResult> run_all(unsigned threads) {
    std::vector<CriterionResult> out;
    std::map<long, TableRow> table;  // shared between criteria 5 and 7
    std::mutex table_mu;

    // 1. closed-form wronskians
    out.push_back(run_criterion(1, "closed-form wronskians W = eta^N", true, [&] {
        FailureLog log;
        std::vector<FamilySpec> specs;
        for (long k = 1; k <= 10; ++k) specs.push_back(FamilySpec::affine(k));
        for (auto [p, pp] : {std::pair<long, long>{2, 5}, {3, 4}, {2, 7}, {3, 5}, {8, 3}})
            specs.push_back(FamilySpec::virasoro(p, pp));
        parallel_for(specs, threads, [&](const FamilySpec& spec) {
            try {
                auto rep = verify_eta_closed_form(spec, 50);
                if (!rep.holds)
                    log.add(spec.label() + " mismatch at " +
                            (rep.first_mismatch ? rat_to_string(*rep.first_mismatch) : "?"));
            } catch (const std::exception& e) {
                log.add(spec.label() + ": " + e.what());
            }
        });
        return std::make_pair(log.empty(),
                              log.summary("15 families, 50 powers each, exact"));
    }));

    // 2. affine vanishing for k = 1..22
    out.push_back(run_criterion(2, "affine vanishing exactly at k = 6, 16", true, [&] {
        FailureLog log;
        std::vector<long> ks;
        for (long k = 1; k <= 22; ++k) ks.push_back(k);
        parallel_for(ks, threads, [&](long k) {
            try {
                // a 25-power zero window certifies the vanishing rows; the
                // nonzero verdict is already carried by the leading term
                bool expected = (k == 6 || k == 16);
                auto res = f_form(FamilySpec::affine(k), expected ? 25 : 4);
                if (res.vanishes != expected)
                    log.add("k=" + std::to_string(k) + " vanishes=" +
                            (res.vanishes ? "true" : "false"));
            } catch (const std::exception& e) {
                log.add("k=" + std::to_string(k) + ": " + e.what());
            }
        });
        return std::make_pair(log.empty(),
                              log.summary("k = 1..22; 25-power windows at k = 6, 16"));
    }));

    // 3. virasoro vanishing
    out.push_back(run_criterion(3, "virasoro vanishing exactly on (2pt^2, 3ppt^2)", true, [&] {
        FailureLog log;
        std::vector<std::pair<FamilySpec, bool>> cases;
        for (auto [p, pp] : {std::pair<long, long>{2, 3}, {8, 3}, {2, 27}})
            cases.emplace_back(FamilySpec::virasoro(p, pp), true);
        for (auto [p, pp] : {std::pair<long, long>{2, 5}, {3, 4}, {2, 7}, {3, 5}})
            cases.emplace_back(FamilySpec::virasoro(p, pp), false);
        parallel_for(cases, threads, [&](const std::pair<FamilySpec, bool>& c) {
            try {
                auto res = f_form(c.first, 25);
                if (res.vanishes != c.second)
                    log.add(c.first.label() + " vanishes=" + (res.vanishes ? "true" : "false"));
            } catch (const std::exception& e) {
                log.add(c.first.label() + ": " + e.what());
            }
        });
        return std::make_pair(log.empty(), log.summary("7 minimal models to 25 powers, exact"));
    }));

    // 4. character identities and the two classical eta expansions
    out.push_back(run_criterion(4, "almost-linear-dependence identities", true, [&] {
        FailureLog log;
        for (long i : {2L, 3L}) {
            auto rep = verify_affine_identity(i, Rat(60));
            if (!rep.holds || rep.constant != to_rat(i))
                log.add("affine i=" + std::to_string(i) + ": " + rep.resolved);
        }
        for (auto [pt, ppt] : {std::pair<long, long>{1, 1}, {2, 1}, {1, 3}}) {
            auto rep = verify_virasoro_identity(pt, ppt, Rat(60));
            if (!rep.holds || rep.constant != 1)
                log.add("virasoro (" + std::to_string(pt) + "," + std::to_string(ppt) +
                        "): " + rep.resolved);
        }
        for (long i = 2; i <= 6; ++i)
            if (!verify_jacobi_rearrangement(i, Rat(60)).holds)
                log.add("jacobi rearrangement i=" + std::to_string(i));
        if (first_difference(eta_power(1, make_rat(1, 24) + 201), pentagonal_sum(201)))
            log.add("pentagonal expansion mismatch");
        if (first_difference(eta_power(3, make_rat(3, 24) + 201), jacobi_cube_sum(201)))
            log.add("jacobi cube expansion mismatch");
        return std::make_pair(log.empty(),
                              log.summary("constants 2, 3, 1; 200-term eta expansions, exact"));
    }));

    // 5. the j-polynomial table for k = 1..11
    out.push_back(run_criterion(5, "G(F, j) table reproduction k = 1..11", true, [&] {
        FailureLog log;
        // printed rationals; k = 9's denominator follows the table's own
        // zero column (1281.987070), not the misprinted 10776887
        const std::map<long, std::vector<std::string>> printed_g = {
            {5, {"-1302528/1075", "1"}},
            {7, {"-787021824/587489", "1"}},
            {8, {"-8696400/20119", "1"}},
            {9, {"-1381580800/1077687", "1"}},
            {10, {"-956352/2021", "1"}},
            {11, {"1908473415598080/13928908741", "-20462710947840/13928908741", "1"}}};
        const std::map<long, std::vector<std::string>> printed_zeros = {
            {5, {"1211.653954"}},  {7, {"1339.636698"}},
            {8, {"432.2481237"}},  {9, {"1281.987070"}},
            {10, {"473.2073231"}}, {11, {"100.0843760", "1368.997756"}}};

        std::vector<long> ks;
        for (long k = 1; k <= 11; ++k) ks.push_back(k);
        parallel_for(ks, threads, [&](long k) {
            try {
                TableRow row;
                row.res = f_form(FamilySpec::affine(k), 50);
                if (k == 6) {
                    if (!row.res.vanishes) log.add("k=6 did not vanish");
                } else {
                    row.dec = decompose(*row.res.f_normalized, row.res.weight);
                    if (k <= 4) {
                        if (!(row.dec->g == JPolynomial({Rat(1)})))
                            log.add("k=" + std::to_string(k) + " G != 1");
                        // F itself is the pure E4/E6 product of that weight
                        QSeries e4 = eisenstein(4, 51), e6 = eisenstein(6, 51);
                        QSeries expect = k == 1   ? e4
                                         : k == 2 ? e6
                                         : k == 3 ? pow_series(e4, 2)
                                                  : e4 * e6;
                        if (!agree_to(*row.res.f_normalized, expect, Rat(50)))
                            log.add("k=" + std::to_string(k) + " F != pure product");
                    } else {
                        std::vector<Rat> want;
                        for (const auto& cs : printed_g.at(k)) want.push_back(rat_from_string(cs));
                        if (!(row.dec->g == JPolynomial(want)))
                            log.add("k=" + std::to_string(k) + " G = " + row.dec->g.display());
                        auto zeros = printed_zeros.at(k);
                        auto ivs = isolate_real_roots(row.dec->g);
                        if (ivs.size() != zeros.size()) {
                            log.add("k=" + std::to_string(k) + " root count");
                        } else {
                            for (std::size_t rj = 0; rj < ivs.size(); ++rj) {
                                std::string dec10 = refine_root(row.dec->g, ivs[rj], 10);
                                if (!within_final_digit(dec10, zeros[rj]))
                                    log.add("k=" + std::to_string(k) + " zero " + dec10 +
                                            " vs printed " + zeros[rj]);
                            }
                        }
                    }
                }
                std::lock_guard<std::mutex> lock(table_mu);
                table.emplace(k, std::move(row));
            } catch (const std::exception& e) {
                log.add("k=" + std::to_string(k) + ": " + e.what());
            }
        });
        return std::make_pair(log.empty(),
                              log.summary("G rationals exact; zeros to 10 digits (1 ulp)"));
    }));

    // 6. congruence theorems for every prime p = 2k+3, k <= 14
    out.push_back(run_criterion(6, "theta / moment / F-integrality congruences", true, [&] {
        FailureLog log;
        std::vector<long> ks;
        for (long k = 1; k <= 14; ++k)
            if (is_prime(2 * k + 3)) ks.push_back(k);
        parallel_for(ks, threads, [&](long k) {
            const long long p = 2 * k + 3;
            try {
                if (!check_theta_congruence(k, Rat(41)).holds)
                    log.add("theta k=" + std::to_string(k));
                if (!check_jacobi_moment_congruence(p, Rat(41)).holds)
                    log.add("moment p=" + std::to_string(p));
                auto fi = check_f_integrality(k, 41);
                if (!fi.holds)
                    log.add("integrality k=" + std::to_string(k) +
                            (fi.a0_matches ? "" : " [a0 product]") +
                            (fi.a0_valuation == 1 ? "" : " [v_p(a0)]") +
                            (fi.w_lead_matches ? "" : " [W lead product]") +
                            (fi.f_integrality.holds ? "" : " [F coefficients]"));
            } catch (const std::exception& e) {
                log.add("k=" + std::to_string(k) + ": " + e.what());
            }
        });
        return std::make_pair(log.empty(),
                              log.summary("k in {1,2,4,5,7,8,10,13,14}, 40+ powers, exact"));
    }));

    // 7. conjecture evidence (non-gating)
    out.push_back(run_criterion(7, "conjecture evidence: hasse + zero location", false, [&] {
        FailureLog log;
        std::vector<long> ks = {1, 2, 4, 5, 7, 8, 10};
        parallel_for(ks, threads, [&](long k) {
            try {
                if (!check_hasse_conjecture(k, 41).holds)
                    log.add("hasse k=" + std::to_string(k));
            } catch (const std::exception& e) {
                log.add("hasse k=" + std::to_string(k) + ": " + e.what());
            }
        });
        for (long k = 1; k <= 11; ++k) {
            if (k == 6) continue;
            try {
                auto it = table.find(k);
                Decomposition dec = (it != table.end() && it->second.dec)
                                        ? *it->second.dec
                                        : decompose(*f_form(FamilySpec::affine(k), 50)
                                                         .f_normalized,
                                                    2 * k + 2);
                auto rep = check_zero_location(dec.g);
                if (!(rep.squarefree && rep.all_real && rep.all_in_0_1728))
                    log.add("zeros k=" + std::to_string(k));
            } catch (const std::exception& e) {
                log.add("zeros k=" + std::to_string(k) + ": " + e.what());
            }
        }
        return std::make_pair(log.empty(),
                              log.summary("hasse to 40+ powers; all zeros simple in [0,1728]"));
    }));

    // 8. quasimodular moment examples
    out.push_back(run_criterion(8, "E_{2m,3} closed forms", true, [&] {
        FailureLog log;
        const Rat ord(52);
        QSeries e2 = eisenstein(2, 53), e4 = eisenstein(4, 53), e6 = eisenstein(6, 53);
        if (!agree_to(e2m3(1, ord), e2, ord)) log.add("E_{2,3} != E2");
        QSeries rhs4 = pow_series(e2, 2).scaled(make_rat(5, 3)) - e4.scaled(make_rat(2, 3));
        if (!agree_to(e2m3(2, ord), rhs4, ord)) log.add("E_{4,3} mismatch");
        QSeries rhs6 = pow_series(e2, 3).scaled(make_rat(35, 9)) -
                       (e2 * e4).scaled(make_rat(14, 3)) + e6.scaled(make_rat(16, 9));
        if (!agree_to(e2m3(3, ord), rhs6, ord)) log.add("E_{6,3} mismatch");
        return std::make_pair(log.empty(), log.summary("three identities to 52 terms, exact"));
    }));

    // 9. oracle equivalence
    out.push_back(run_criterion(9, "oracle equivalence and basis invariance", true, [&] {
        FailureLog log;
        // (a) leibniz vs elimination on every 2x2..4x4 wronskian in the suite
        std::vector<FamilySpec> small;
        for (long k = 1; k <= 3; ++k) small.push_back(FamilySpec::affine(k));
        for (auto [p, pp] : {std::pair<long, long>{2, 5}, {3, 4}, {2, 7}, {3, 5}})
            small.push_back(FamilySpec::virasoro(p, pp));
        for (const auto& spec : small) {
            auto basis = character_basis(spec, Rat(20));
            std::vector<std::vector<QSeries>> rows, rows_prime;
            std::vector<QSeries> cur = basis;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                rows.push_back(cur);
                for (auto& c : cur) c = derive(c);
                rows_prime.push_back(cur);
            }
            if (first_difference(wronskian(basis), determinant_leibniz(rows)))
                log.add(spec.label() + " W oracle");
            if (first_difference(wronskian_prime(basis), determinant_leibniz(rows_prime)))
                log.add(spec.label() + " W' oracle");
        }
        // (b) eta via product vs pentagonal sum, 500 terms
        if (first_difference(eta_power(1, make_rat(1, 24) + 501), pentagonal_sum(501)))
            log.add("eta product vs pentagonal (500 terms)");
        // (c) basis invariance of normalized F under random GL(Z) changes
        std::mt19937_64 rng(20240817);
        std::uniform_int_distribution<long> entry(-3, 3);
        for (const auto& spec : {FamilySpec::affine(1), FamilySpec::affine(2),
                                 FamilySpec::affine(3), FamilySpec::virasoro(2, 5),
                                 FamilySpec::virasoro(3, 4)}) {
            auto basis = character_basis(spec, Rat(22));
            const std::size_t m = basis.size();
            QSeries w = wronskian(basis);
            QSeries f_ref = div(wronskian_prime(basis), w);
            f_ref = f_ref.scaled(Rat(1) / f_ref.leading_coeff());
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<std::vector<long>> mat(m, std::vector<long>(m));
                do {
                    for (auto& row : mat)
                        for (auto& x : row) x = entry(rng);
                } while (int_det(mat) == 0);
                std::vector<QSeries> tb;
                for (std::size_t jc = 0; jc < m; ++jc) {
                    QSeries acc = basis[0].scaled(to_rat(mat[0][jc]));
                    for (std::size_t ic = 1; ic < m; ++ic)
                        acc = acc + basis[ic].scaled(to_rat(mat[ic][jc]));
                    tb.push_back(std::move(acc));
                }
                QSeries f2 = div(wronskian_prime(tb), wronskian(tb));
                f2 = f2.scaled(Rat(1) / f2.leading_coeff());
                if (first_difference(f2, f_ref)) {
                    log.add(spec.label() + " basis change trial " + std::to_string(trial));
                    break;
                }
            }
        }
        return std::make_pair(log.empty(),
                              log.summary("leibniz = bareiss; eta dual route; 10 GL changes"));
    }));

    return out;
}

bool all_gating_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (r.gating && !r.pass) return false;
    return true;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "criterion " << r.number << ": " << (r.pass ? "PASS" : "FAIL");
    if (!r.gating) os << " (evidence)";
    os << " — " << r.name;
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os.precision(1);
    os << " [" << std::fixed << r.seconds << "s]";
    return os.str();
}

} // namespace wronq::acceptance
