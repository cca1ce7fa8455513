#include <wronq/rational.hpp>

#include <stdexcept>

namespace wronq {

Rat rat_from_string(const std::string& s) {
    auto pos = s.find('/');
    Rat r;
    if (pos == std::string::npos) {
        r = Rat(Int(s));
    } else {
        Int num(s.substr(0, pos));
        Int den(s.substr(pos + 1));
        if (den == 0) throw std::domain_error("rat_from_string: zero denominator");
        r = Rat(num, den);
        r.canonicalize();
    }
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), ue);
    if (neg) {
        if (num == 0) throw std::domain_error("rat_pow: negative power of zero");
        std::swap(num, den);
    }
    Rat out(num, den);
    out.canonicalize();
    return out;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

Rat ceil_to_lattice(const Rat& x, long long den) {
    Rat scaled = x * to_rat(den);
    Int num = scaled.get_num(), d = scaled.get_den();
    Int fl = floor_div(num, d);
    if (fl * d != num) fl += 1;
    Rat out{fl, to_int(den)};
    out.canonicalize();
    return out;
}

Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

} // namespace wronq
