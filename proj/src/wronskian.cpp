#include <wronq/wronskian.hpp>

#include <wronq/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace wronq {

std::string FamilySpec::label() const {
    if (family == Family::Affine) return "affine k=" + std::to_string(k);
    return "virasoro (" + std::to_string(p) + "," + std::to_string(pp) + ")";
}

long FamilySpec::basis_size() const {
    if (family == Family::Affine) {
        make_affine_spec(k, 1);
        return k + 1;
    }
    validate_virasoro_pair(p, pp);
    return (p - 1) * (pp - 1) / 2;
}

long FamilySpec::eta_exponent() const {
    if (family == Family::Affine) return 2 * k * (k + 1);
    return (p - 1) * (pp - 1) * (p * pp - p - pp - 1) / 2;
}

VanishingClassification FamilySpec::classify() const {
    return family == Family::Affine ? classify_vanishing_affine(k)
                                    : classify_vanishing_virasoro(p, pp);
}

std::vector<QSeries> character_basis(const FamilySpec& spec, const Rat& order, bool monic) {
    std::vector<QSeries> basis;
    if (spec.family == Family::Affine) {
        for (long i = 1; i <= spec.k + 1; ++i)
            basis.push_back(affine_char(spec.k, i, order));
    } else {
        for (const auto& mod : virasoro_module_list(spec.p, spec.pp))
            basis.push_back(virasoro_char(mod.p, mod.pp, mod.r, mod.s, order));
    }
    if (monic)
        for (auto& b : basis) b = b.scaled(Rat(1) / b.leading_coeff());
    return basis;
}

namespace {

// Effective lead for order bookkeeping of empty series.
Rat lead_eff(const QSeries& s) {
    return s.is_zero_to_order() ? s.order() : s.leading_exponent();
}

// Conservative zero determinant for a block whose pivot column vanished:
// every Leibniz term picks one entry from each row, so the unknown part of
// the determinant starts no earlier than the best row assignment reaches.
QSeries zero_block_determinant(const std::vector<std::vector<QSeries>>& m,
                               std::size_t from) {
    const std::size_t n = m.size();
    long long den = 1;
    for (std::size_t i = from; i < n; ++i)
        for (std::size_t j = from; j < n; ++j) den = lcm_ll(den, m[i][j].lattice_den());

    std::vector<Rat> row_min(n), row_order(n);
    for (std::size_t i = from; i < n; ++i) {
        Rat mn = lead_eff(m[i][from]), od = m[i][from].order();
        for (std::size_t j = from; j < n; ++j) {
            mn = std::min(mn, lead_eff(m[i][j]));
            od = std::min(od, m[i][j].order());
        }
        row_min[i] = mn;
        row_order[i] = od;
    }
    // min over rows r of (order_r + sum of other rows' leads)
    std::optional<Rat> bound;
    for (std::size_t r = from; r < n; ++r) {
        Rat b = row_order[r];
        for (std::size_t i = from; i < n; ++i)
            if (i != r) b += row_min[i];
        if (!bound || b < *bound) bound = b;
    }
    // floor onto the common lattice
    Rat scaled = *bound * to_rat(den);
    Int fl = floor_div(scaled.get_num(), scaled.get_den());
    Rat order{fl, to_int(den)};
    order.canonicalize();
    return QSeries::zero(den, order);
}

} // namespace

QSeries determinant_bareiss(std::vector<std::vector<QSeries>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 1) return m[0][0];

    int sign = 1;
    std::optional<QSeries> prev;  // pivot of the previous step
    for (std::size_t p = 0; p + 1 < n; ++p) {
        // valuation-aware pivot: smallest leading exponent in the column
        std::optional<std::size_t> pivot;
        for (std::size_t r = p; r < n; ++r) {
            if (m[r][p].is_zero_to_order()) continue;
            if (!pivot || m[r][p].leading_exponent() < m[*pivot][p].leading_exponent())
                pivot = r;
        }
        if (!pivot) {
            // column vanished to order: the determinant is zero to a
            // computable order; undo the pending Bareiss divisions
            QSeries zero = zero_block_determinant(m, p);
            if (prev)
                for (std::size_t q = p; q + 1 < n; ++q) zero = div(zero, *prev);
            return sign < 0 ? -zero : zero;
        }
        if (*pivot != p) {
            std::swap(m[*pivot], m[p]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                QSeries num = m[p][p] * m[i][j] - m[i][p] * m[p][j];
                m[i][j] = prev ? div(num, *prev) : std::move(num);
            }
            m[i][p] = QSeries();  // eliminated
        }
        prev = m[p][p];
    }
    QSeries det = std::move(m[n - 1][n - 1]);
    return sign < 0 ? -det : det;
}

QSeries determinant_leibniz(const std::vector<std::vector<QSeries>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    if (n == 1) return m[0][0];
    // first-row expansion
    std::optional<QSeries> acc;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<QSeries>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<QSeries> row;
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        QSeries term = m[0][j] * determinant_leibniz(minor);
        if (j % 2 == 1) term = -term;
        acc = acc ? *acc + term : term;
    }
    return *acc;
}

namespace {

std::vector<std::vector<QSeries>> derivative_matrix(const std::vector<QSeries>& basis,
                                                    unsigned first_row, unsigned last_row) {
    std::vector<std::vector<QSeries>> rows;
    std::vector<QSeries> current = basis;
    for (unsigned j = 0; j < first_row; ++j)
        for (auto& c : current) c = derive(c);
    for (unsigned j = first_row; j <= last_row; ++j) {
        rows.push_back(current);
        if (j < last_row)
            for (auto& c : current) c = derive(c);
    }
    return rows;
}

} // namespace

QSeries wronskian(const std::vector<QSeries>& basis) {
    if (basis.empty()) throw std::invalid_argument("wronskian of empty basis");
    return determinant_bareiss(
        derivative_matrix(basis, 0, static_cast<unsigned>(basis.size()) - 1));
}

QSeries wronskian_prime(const std::vector<QSeries>& basis) {
    if (basis.empty()) throw std::invalid_argument("wronskian of empty basis");
    return determinant_bareiss(
        derivative_matrix(basis, 1, static_cast<unsigned>(basis.size())));
}

namespace {

Rat max_basis_lead(const FamilySpec& spec) {
    std::optional<Rat> mx;
    if (spec.family == Family::Affine) {
        for (long i = 1; i <= spec.k + 1; ++i) {
            Rat l = affine_char_lead(spec.k, i);
            if (!mx || l > *mx) mx = l;
        }
    } else {
        for (const auto& mod : virasoro_module_list(spec.p, spec.pp)) {
            Rat l = virasoro_char_lead(mod.p, mod.pp, mod.r, mod.s);
            if (!mx || l > *mx) mx = l;
        }
    }
    return *mx;
}

} // namespace

WronskianResult f_form_with_budget(const FamilySpec& spec, long n_terms, long budget_steps) {
    const long m = spec.basis_size();
    const auto classifier = spec.classify();

    const Rat order_abs = max_basis_lead(spec) + to_rat(budget_steps);
    std::vector<QSeries> basis = character_basis(spec, order_abs);

    WronskianResult out;
    out.spec = spec;
    out.weight = 2 * m;
    out.w = wronskian(basis);
    out.w_prime = wronskian_prime(basis);
    if (out.w.is_zero_to_order())
        throw std::logic_error("f_form: W vanished to order for " + spec.label());

    const Rat lead_w = out.w.leading_exponent();
    const Rat need(to_rat(n_terms));

    bool numeric_vanishes;
    if (out.w_prime.is_zero_to_order()) {
        if (out.w_prime.order() - lead_w < need)
            throw InsufficientOrder("f_form: zero window short of " +
                                    std::to_string(n_terms) + " powers for " + spec.label());
        numeric_vanishes = true;
    } else {
        numeric_vanishes = false;
    }

    if (numeric_vanishes != classifier.vanishes)
        throw ClassifierMismatch("f_form: numeric zero-to-order = " +
                                 std::string(numeric_vanishes ? "true" : "false") +
                                 " disagrees with the exact classifier for " + spec.label());
    out.vanishes = numeric_vanishes;

    out.w_monic = out.w.scaled(Rat(1) / out.w.leading_coeff());
    if (!numeric_vanishes) {
        QSeries f = div(out.w_prime, out.w);
        if (f.order() < need)
            throw InsufficientOrder("f_form: F delivered to order " + rat_to_string(f.order()) +
                                    " < " + std::to_string(n_terms) + " for " + spec.label());
        if (f.leading_exponent() != 0)
            throw std::logic_error("f_form: F does not start at exponent 0 for " + spec.label());
        f = f.truncated(need);
        QSeries fn = f.scaled(Rat(1) / f.leading_coeff());
        for (const auto& [e, c] : fn.terms()) {
            (void)c;
            if (e < 0 || e % fn.lattice_den() != 0)
                throw std::logic_error("f_form: F support off the integer lattice for " +
                                       spec.label());
        }
        out.f = std::move(f);
        out.f_normalized = std::move(fn);
    }

    // tidy the reported series
    Rat w_cut = lead_w + need;
    if (out.w.order() > w_cut) out.w = out.w.truncated(w_cut);
    out.w_monic = out.w_monic.order() > w_cut ? out.w_monic.truncated(w_cut) : out.w_monic;
    Rat wp_cut = (numeric_vanishes ? lead_w : out.w_prime.leading_exponent()) + need;
    if (out.w_prime.order() > wp_cut) out.w_prime = out.w_prime.truncated(wp_cut);
    return out;
}

WronskianResult f_form(const FamilySpec& spec, long n_terms) {
    const long m = spec.basis_size();
    try {
        return f_form_with_budget(spec, n_terms, n_terms + m + 10);
    } catch (const InsufficientOrder&) {
        return f_form_with_budget(spec, n_terms, n_terms + m * (m + 1) / 2 + 10);
    }
}

EtaCheckReport verify_eta_closed_form(const FamilySpec& spec, long n_terms) {
    const long m = spec.basis_size();
    const Rat order_abs = max_basis_lead(spec) + to_rat(n_terms + m + 10);
    QSeries w = wronskian(character_basis(spec, order_abs));

    EtaCheckReport rep;
    rep.eta_exponent = spec.eta_exponent();
    QSeries monic = w.scaled(Rat(1) / w.leading_coeff());
    QSeries eta = eta_power(rep.eta_exponent,
                            ceil_to_lattice(make_rat(rep.eta_exponent, 24) + n_terms, 24));
    if (monic.leading_exponent() != make_rat(rep.eta_exponent, 24)) {
        rep.holds = false;
        rep.first_mismatch = monic.leading_exponent();
        return rep;
    }
    Rat target = make_rat(rep.eta_exponent, 24) + to_rat(n_terms);
    Rat window = std::min(monic.order(), std::min(eta.order(), target));
    QSeries diff = (monic - eta).truncated(window);
    rep.holds = diff.is_zero_to_order();
    if (!rep.holds) rep.first_mismatch = diff.leading_exponent();
    return rep;
}

} // namespace wronq
