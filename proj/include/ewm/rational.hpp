#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ewm {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

// "p/q", "p" or "-p/q"; throws std::invalid_argument on garbage or q == 0
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
std::string to_string(const Vec& v);

bool is_integer(const Q& q);
bool is_integral(const Vec& v);
bool is_zero(const Vec& v);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Q& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
Q dot(const Vec& a, const Vec& b);

// positive multiple with coprime integer entries; zero stays zero
Vec primitive(const Vec& v);
Vec from_ints(const std::vector<long>& v);
std::vector<long> to_longs(const Vec& v);

}  // namespace ewm
