#include <wronq/qseries.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wronq {

namespace {

// Exponent numerator of e on lattice 1/den; throws when e is off-lattice.
long long exp_num_on(const Rat& e, long long den, const char* what) {
    Rat scaled = e * to_rat(den);
    if (!rat_is_integer(scaled))
        throw std::invalid_argument(std::string(what) + ": exponent not on lattice 1/" +
                                    std::to_string(den));
    if (!scaled.get_num().fits_slong_p())
        throw std::overflow_error(std::string(what) + ": exponent numerator overflow");
    return scaled.get_num().get_si();
}

long long lead_eff_num(const QSeries& x) {
    return x.is_zero_to_order() ? x.order_num() : x.terms().begin()->first;
}

} // namespace

QSeries::QSeries() : den_(1), order_num_(0) {}

QSeries::QSeries(long long den, long long order_num, std::map<long long, Rat> terms)
    : den_(den), order_num_(order_num), terms_(std::move(terms)) {
    prune();
}

void QSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first >= order_num_ || it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

QSeries QSeries::zero(long long lattice_den, const Rat& order) {
    if (lattice_den < 1) throw std::invalid_argument("QSeries: lattice_den must be positive");
    return QSeries(lattice_den, exp_num_on(order, lattice_den, "QSeries::zero"), {});
}

QSeries QSeries::constant(const Rat& c, const Rat& order) {
    QSeries out = zero(1, order);
    if (c != 0 && out.order_num_ > 0) out.terms_.emplace(0, c);
    return out;
}

QSeries QSeries::monomial(const Rat& coeff, const Rat& exponent,
                          long long lattice_den, const Rat& order) {
    QSeries out = zero(lattice_den, order);
    long long n = exp_num_on(exponent, lattice_den, "QSeries::monomial");
    if (coeff != 0 && n < out.order_num_) out.terms_.emplace(n, coeff);
    return out;
}

QSeries QSeries::from_terms(long long lattice_den,
                            std::vector<std::pair<long long, Rat>> terms,
                            const Rat& order) {
    QSeries out = zero(lattice_den, order);
    for (auto& [n, c] : terms) out.terms_[n] += c;
    out.prune();
    return out;
}

Rat QSeries::order() const {
    return make_rat(order_num_, den_);
}

std::pair<Rat, Rat> QSeries::leading_term() const {
    if (terms_.empty()) throw ZeroSeries("leading_term: series is zero to its order");
    const auto& [n, c] = *terms_.begin();
    return {make_rat(n, den_), c};
}

Rat QSeries::leading_exponent() const { return leading_term().first; }
Rat QSeries::leading_coeff() const { return leading_term().second; }

std::optional<Rat> QSeries::coeff(const Rat& e) const {
    if (e >= order()) return std::nullopt;
    Rat scaled = e * to_rat(den_);
    if (!rat_is_integer(scaled)) return Rat(0);
    long long n = scaled.get_num().get_si();
    auto it = terms_.find(n);
    return it == terms_.end() ? Rat(0) : it->second;
}

QSeries QSeries::rescaled(long long new_den) const {
    if (new_den == den_) return *this;
    if (new_den <= 0 || new_den % den_ != 0)
        throw std::invalid_argument("QSeries::rescaled: lattice must refine the current one");
    long long f = new_den / den_;
    std::map<long long, Rat> t;
    for (const auto& [n, c] : terms_) t.emplace(n * f, c);
    return QSeries(new_den, order_num_ * f, std::move(t));
}

QSeries QSeries::truncated(const Rat& order) const {
    long long n = exp_num_on(order, den_, "QSeries::truncated");
    if (n >= order_num_) return *this;
    return QSeries(den_, n, terms_);
}

QSeries QSeries::shifted(const Rat& delta) const {
    long long dden = delta.get_den().get_si();
    long long L = lcm_ll(den_, dden);
    QSeries base = rescaled(L);
    long long dn = exp_num_on(delta, L, "QSeries::shifted");
    std::map<long long, Rat> t;
    for (const auto& [n, c] : base.terms_) t.emplace(n + dn, c);
    return QSeries(L, base.order_num_ + dn, std::move(t));
}

QSeries QSeries::scaled(const Rat& c) const {
    if (c == 0) return QSeries(den_, order_num_, {});
    std::map<long long, Rat> t;
    for (const auto& [n, v] : terms_) t.emplace(n, v * c);
    return QSeries(den_, order_num_, std::move(t));
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.den_ == b.den_ && a.order_num_ == b.order_num_ && a.terms_ == b.terms_;
}

std::pair<QSeries, QSeries> aligned(const QSeries& a, const QSeries& b) {
    long long L = lcm_ll(a.den_, b.den_);
    return {a.rescaled(L), b.rescaled(L)};
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    auto [x, y] = aligned(a, b);
    long long order = std::min(x.order_num_, y.order_num_);
    std::map<long long, Rat> t = std::move(x.terms_);
    for (const auto& [n, c] : y.terms_) t[n] += c;
    return QSeries(x.den_, order, std::move(t));
}

QSeries operator-(const QSeries& a) { return a.scaled(Rat(-1)); }

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    auto [x, y] = aligned(a, b);
    long long order = std::min(x.order_num_ + lead_eff_num(y),
                               y.order_num_ + lead_eff_num(x));
    std::map<long long, Rat> t;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            long long e = ea + eb;
            if (e >= order) break;  // y sorted ascending
            t[e] += ca * cb;
        }
    }
    return QSeries(x.den_, order, std::move(t));
}

QSeries invert(const QSeries& a) {
    if (a.terms_.empty())
        throw InversionOfZero("invert: series is zero to its order");
    const long long n0 = a.terms_.begin()->first;
    const Rat c0 = a.terms_.begin()->second;
    const long long out_order = a.order_num_ - 2 * n0;
    const long long span = a.order_num_ - n0;  // relative precision in lattice units

    // All relative offsets are multiples of their gcd; the inverse lives on
    // the same sublattice, so the recurrence only walks those steps.
    long long g = 0;
    for (auto it = std::next(a.terms_.begin()); it != a.terms_.end(); ++it)
        g = gcd_ll(g, it->first - n0);
    if (g == 0) {
        // Monomial: inverse is a monomial.
        std::map<long long, Rat> t;
        t.emplace(-n0, Rat(1) / c0);
        return QSeries(a.den_, out_order, std::move(t));
    }

    const long long steps = (span - 1) / g;  // largest d with d*g < span
    std::vector<Rat> rel(static_cast<std::size_t>(steps) + 1, Rat(0));
    std::vector<std::pair<long long, Rat>> anorm;  // (offset/g, coeff/c0), offset > 0
    for (auto it = std::next(a.terms_.begin()); it != a.terms_.end(); ++it)
        anorm.emplace_back((it->first - n0) / g, it->second / c0);

    rel[0] = 1;
    for (long long d = 1; d <= steps; ++d) {
        Rat acc(0);
        for (const auto& [j, c] : anorm) {
            if (j > d) break;
            if (rel[static_cast<std::size_t>(d - j)] != 0)
                acc += c * rel[static_cast<std::size_t>(d - j)];
        }
        rel[static_cast<std::size_t>(d)] = -acc;
    }

    std::map<long long, Rat> t;
    for (long long d = 0; d <= steps; ++d) {
        if (rel[static_cast<std::size_t>(d)] == 0) continue;
        t.emplace(-n0 + d * g, rel[static_cast<std::size_t>(d)] / c0);
    }
    return QSeries(a.den_, out_order, std::move(t));
}

QSeries div(const QSeries& a, const QSeries& b) { return a * invert(b); }

QSeries derive(const QSeries& a, unsigned s) {
    if (s == 0) return a;
    std::map<long long, Rat> t;
    for (const auto& [n, c] : a.terms()) {
        if (n == 0) continue;
        t.emplace(n, c * rat_pow(make_rat(n, a.lattice_den()), static_cast<long>(s)));
    }
    return QSeries::from_terms(a.lattice_den(), {t.begin(), t.end()}, a.order());
}

QSeries pow_series(const QSeries& a, long e) {
    if (e < 0) return invert(pow_series(a, -e));
    if (e == 0) {
        Rat rel = a.is_zero_to_order() ? a.order() : a.order() - a.leading_exponent();
        return QSeries::constant(Rat(1), rel);
    }
    QSeries base = a;
    QSeries result;
    bool have = false;
    long k = e;
    while (k > 0) {
        if (k & 1) {
            result = have ? result * base : base;
            have = true;
        }
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

QSeries eta_power(long r, const Rat& order) {
    QSeries shell = QSeries::zero(24, order);
    const long long order_num = shell.order_num();
    if (order_num <= r)
        throw std::invalid_argument("eta_power: order must exceed r/24");
    // Window of integral steps above the leading exponent r/24.
    const long long count = (order_num - r - 1) / 24 + 1;
    std::vector<Rat> v(static_cast<std::size_t>(count), Rat(0));
    v[0] = 1;
    const long reps = r >= 0 ? r : -r;
    for (long long n = 1; n < count; ++n) {
        for (long rep = 0; rep < reps; ++rep) {
            if (r > 0) {
                for (long long j = count - 1; j >= n; --j)
                    v[static_cast<std::size_t>(j)] -= v[static_cast<std::size_t>(j - n)];
            } else {
                for (long long j = n; j < count; ++j)
                    v[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j - n)];
            }
        }
    }
    std::vector<std::pair<long long, Rat>> terms;
    for (long long j = 0; j < count; ++j)
        if (v[static_cast<std::size_t>(j)] != 0)
            terms.emplace_back(r + 24 * j, v[static_cast<std::size_t>(j)]);
    return QSeries::from_terms(24, std::move(terms), order);
}

namespace {

std::optional<Rat> first_difference_below(const QSeries& a, const QSeries& b,
                                          long long bound_num) {
    // Operands must share a lattice.
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    auto exp_of = [&](long long n) { return make_rat(n, a.lattice_den()); };
    while (ia != ea || ib != eb) {
        long long na = ia != ea ? ia->first : bound_num;
        long long nb = ib != eb ? ib->first : bound_num;
        long long n = std::min(na, nb);
        if (n >= bound_num) break;
        Rat ca = (na == n) ? ia->second : Rat(0);
        Rat cb = (nb == n) ? ib->second : Rat(0);
        if (ca != cb) return exp_of(n);
        if (na == n) ++ia;
        if (nb == n) ++ib;
    }
    return std::nullopt;
}

} // namespace

std::optional<Rat> first_difference(const QSeries& a, const QSeries& b) {
    auto [x, y] = aligned(a, b);
    return first_difference_below(x, y, std::min(x.order_num(), y.order_num()));
}

bool agree_to(const QSeries& a, const QSeries& b, const Rat& order) {
    auto [x, y] = aligned(a, b);
    if (x.order() < order || y.order() < order)
        throw InsufficientOrder("agree_to: operands not guaranteed to the requested order");
    // Exponents strictly below `order` have numerators < ceil(order * N).
    Rat scaled = order * to_rat(x.lattice_den());
    Int f = floor_div(scaled.get_num(), scaled.get_den());
    long long bound = f.get_si() + ((f * scaled.get_den() == scaled.get_num()) ? 0 : 1);
    return !first_difference_below(x, y, bound).has_value();
}

std::string to_string(const QSeries& a, std::size_t max_terms) {
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& [n, c] : a.terms()) {
        if (shown == max_terms) {
            os << " + ...";
            break;
        }
        if (shown > 0) os << " + ";
        os << "(" << rat_to_string(c) << ")q^(" << rat_to_string(make_rat(n, a.lattice_den())) << ")";
        ++shown;
    }
    if (a.terms().empty()) os << "0";
    os << " + O(q^(" << rat_to_string(a.order()) << "))";
    return os.str();
}

} // namespace wronq
