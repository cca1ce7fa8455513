#include <wronq/modforms.hpp>

#include <wronq/errors.hpp>

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wronq {

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli;  // B_0, B_1, ...
} // namespace

Rat bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.push_back(Rat(1));
    while (g_bernoulli.size() <= n) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0  =>  B_m
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        Rat acc(0);
        for (unsigned k = 0; k < m; ++k) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
            acc += Rat(binom) * g_bernoulli[k];
        }
        g_bernoulli.push_back(-acc / Rat(static_cast<long>(m) + 1));
    }
    return g_bernoulli[n];
}

QSeries eisenstein(unsigned two_k, long terms) {
    if (two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("eisenstein: weight must be a positive even integer");
    if (terms < 1) return QSeries::zero(1, to_rat(terms));
    const Rat factor = -to_rat(2 * two_k) / bernoulli(two_k);
    std::vector<Int> sigma(static_cast<std::size_t>(terms));
    for (long d = 1; d < terms; ++d) {
        Int dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), two_k - 1);
        for (long n = d; n < terms; n += d) sigma[static_cast<std::size_t>(n)] += dp;
    }
    std::vector<std::pair<long long, Rat>> t;
    t.emplace_back(0, Rat(1));
    for (long n = 1; n < terms; ++n)
        t.emplace_back(n, factor * Rat(sigma[static_cast<std::size_t>(n)]));
    return QSeries::from_terms(1, std::move(t), to_rat(terms));
}

QSeries delta_form(long terms) {
    QSeries e4 = eisenstein(4, terms);
    QSeries e6 = eisenstein(6, terms);
    QSeries d = (pow_series(e4, 3) - pow_series(e6, 2)).scaled(make_rat(1, 1728));
    QSeries via_eta = eta_power(24, to_rat(terms));
    if (first_difference(d, via_eta).has_value())
        throw std::logic_error("delta_form: (E4^3 - E6^2)/1728 disagrees with eta^24");
    return d.truncated(to_rat(terms));
}

QSeries j_function(long terms) {
    const long work = terms + 3;
    QSeries e4cubed = pow_series(eisenstein(4, work), 3);
    QSeries disc = e4cubed - pow_series(eisenstein(6, work), 2);
    QSeries j = div(e4cubed.scaled(to_rat(1728)), disc);
    return j.truncated(to_rat(terms));
}

void JPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rat JPolynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

JPolynomial JPolynomial::derivative() const {
    std::vector<Rat> out;
    for (std::size_t d = 1; d < coeffs.size(); ++d)
        out.push_back(coeffs[d] * to_rat(static_cast<long long>(d)));
    return JPolynomial(std::move(out));
}

std::string JPolynomial::display(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        Rat c = coeffs[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (d == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << " ";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::tuple<long, int, int> weight_exponents(long weight) {
    if (weight < 0 || weight % 2 != 0)
        throw WeightUnrepresentable("weight must be a nonnegative even integer, got " +
                                    std::to_string(weight));
    static const int table[6][2] = {
        {0, 0},  // 0 mod 12
        {2, 1},  // 2 mod 12 (4*2 + 6*1 = 14)
        {1, 0},  // 4
        {0, 1},  // 6
        {2, 0},  // 8
        {1, 1},  // 10
    };
    int idx = static_cast<int>((weight % 12) / 2);
    int delta = table[idx][0], epsilon = table[idx][1];
    long t = (weight - 4 * delta - 6 * epsilon) / 12;
    if (t < 0)
        throw WeightUnrepresentable("no holomorphic level-one form of weight " +
                                    std::to_string(weight));
    return {t, delta, epsilon};
}

namespace {

// Lattice-1 copy of a holomorphic integral expansion; rejects fractional or
// negative exponents.
QSeries as_integral_expansion(const QSeries& f) {
    std::vector<std::pair<long long, Rat>> t;
    for (const auto& [n, c] : f.terms()) {
        if (n < 0 || n % f.lattice_den() != 0)
            throw NonzeroRemainder("decompose: input is not holomorphic on the integer lattice");
        t.emplace_back(n / f.lattice_den(), c);
    }
    Rat order = f.order();
    Int fl = floor_div(order.get_num(), order.get_den());
    return QSeries::from_terms(1, std::move(t), Rat(fl));
}

} // namespace

Decomposition decompose(const QSeries& f, long weight) {
    Decomposition out;
    if (f.is_zero_to_order()) {
        try {
            std::tie(out.t, out.delta, out.epsilon) = weight_exponents(weight);
        } catch (const WeightUnrepresentable&) {
            out.t = 0;
            out.delta = 0;
            out.epsilon = 0;
        }
        return out;
    }
    std::tie(out.t, out.delta, out.epsilon) = weight_exponents(weight);

    QSeries h = as_integral_expansion(f);
    const long work = static_cast<long>(h.order().get_num().get_si()) + out.t + 2;
    if (out.t > 0) h = div(h, pow_series(delta_form(work), out.t));
    if (out.delta > 0) h = div(h, pow_series(eisenstein(4, work), out.delta));
    if (out.epsilon > 0) h = div(h, eisenstein(6, work));

    QSeries j = j_function(work);
    std::vector<Rat> g(static_cast<std::size_t>(out.t) + 1, Rat(0));
    while (!h.is_zero_to_order() && h.leading_exponent() <= 0) {
        auto [e, c] = h.leading_term();
        long d = -static_cast<long>(e.get_num().get_si());
        if (d > out.t)
            throw NonzeroRemainder("decompose: pole order exceeds t");
        g[static_cast<std::size_t>(d)] += c;
        h = h - pow_series(j, d).scaled(c);
    }
    if (!h.is_zero_to_order()) {
        throw NonzeroRemainder("decompose: nonzero remainder at exponent " +
                               rat_to_string(h.leading_exponent()));
    }
    if (h.order() < 1)
        throw NonzeroRemainder("decompose: order insufficient to certify the remainder");
    out.g = JPolynomial(std::move(g));
    return out;
}

QSeries jacobi_moment(unsigned m, const Rat& order) {
    // Numerator: sum_n (-1)^n (2n+1)^{2m+1} 8^{-m} q^{(2n+1)^2/8}, lattice 8.
    QSeries shell = QSeries::zero(8, order + make_rat(1, 8));
    const long long bound = shell.order_num();
    const Rat scale = rat_pow(make_rat(1, 8), static_cast<long>(m));
    std::vector<std::pair<long long, Rat>> t;
    for (long long n = 0;; ++n) {
        long long odd = 2 * n + 1;
        long long en = odd * odd;
        if (en >= bound) break;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(odd), 2 * m + 1);
        Rat c = Rat(p) * scale;
        t.emplace_back(en, (n % 2 == 0) ? c : Rat(-c));
    }
    QSeries num = QSeries::from_terms(8, std::move(t), order + make_rat(1, 8));
    QSeries eta3 = eta_power(3, order + make_rat(1, 8));
    return div(num, eta3).truncated(order);
}

QSeries e2m3(unsigned m, const Rat& order) {
    QSeries jm = jacobi_moment(m, order);
    return jm.scaled(Rat(1) / jm.leading_coeff());
}

} // namespace wronq
