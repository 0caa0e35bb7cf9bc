#include "ewm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ewm {

namespace {

Z parse_integer(const std::string& s, const std::string& whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw std::invalid_argument("bad rational '" + whole + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("bad rational '" + whole + "'");
    Z z;
    z.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    return z;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Q parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Q(parse_integer(s, raw));
    Z num = parse_integer(trim(s.substr(0, slash)), raw);
    Z den = parse_integer(trim(s.substr(slash + 1)), raw);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    Q q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

bool is_integral(const Vec& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec zeros(std::size_t n) { return Vec(n, Q(0)); }

Vec unit(std::size_t n, std::size_t i) {
    Vec v = zeros(n);
    v.at(i) = 1;
    return v;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    r += b;
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    r -= b;
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Q& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Q dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec primitive(const Vec& v) {
    if (is_zero(v)) return v;
    Z l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Z> ints;
    Z g = 0;
    for (const auto& x : v) {
        Q y = x * l;
        ints.push_back(y.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    Vec r;
    for (auto& z : ints) r.emplace_back(Z(z / g));
    return r;
}

Vec from_ints(const std::vector<long>& v) {
    Vec r;
    for (long x : v) r.emplace_back(x);
    return r;
}

std::vector<long> to_longs(const Vec& v) {
    std::vector<long> r;
    for (const auto& x : v) {
        if (!is_integer(x) || !x.get_num().fits_slong_p())
            throw std::invalid_argument("not a machine integer: " + x.get_str());
        r.push_back(x.get_num().get_si());
    }
    return r;
}

}  // namespace ewm
