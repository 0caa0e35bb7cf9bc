#include "ewm/rootlat.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace ewm {

namespace {

bool valid_rank(char t, int n) {
    switch (t) {
        case 'A': return n >= 1;
        case 'B':
        case 'C': return n >= 2;
        case 'D': return n >= 3;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

void link(std::vector<std::vector<long>>& c, int i, int j) {
    c[i][j] = -1;
    c[j][i] = -1;
}

}  // namespace

std::vector<std::vector<long>> bourbaki_cartan(char t, int n) {
    if (!valid_rank(t, n))
        throw std::invalid_argument(std::string("invalid root system ") + t + std::to_string(n));
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    switch (t) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
            c[n - 1][n - 2] = -2;
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 3 < n; ++i) link(c, i, i + 1);
            link(c, n - 3, n - 2);
            link(c, n - 3, n - 1);
            break;
        case 'E':
            link(c, 0, 2);
            link(c, 1, 3);
            for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
            break;
        case 'F':
            link(c, 0, 1);
            link(c, 1, 2);
            link(c, 2, 3);
            c[2][1] = -2;
            break;
        case 'G':
            c[0][1] = -3;
            c[1][0] = -1;
            break;
    }
    return c;
}

std::size_t expected_positive_root_count(char t, int n) {
    switch (t) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

RootSystem RootSystem::build(const std::vector<Factor>& input) {
    RootSystem r;
    // B1 and C1 are accepted as aliases of A1
    std::vector<Factor> factors = input;
    for (auto& f : factors)
        if ((f.type == 'B' || f.type == 'C') && f.rank == 1) f.type = 'A';
    r.factors_ = factors;
    std::size_t total = 0;
    for (const auto& f : factors) {
        if (!valid_rank(f.type, f.rank))
            throw std::invalid_argument(std::string("invalid root system ") + f.type +
                                        std::to_string(f.rank));
        r.offsets_.push_back(total);
        total += f.rank;
    }
    r.cartan_.assign(total, std::vector<long>(total, 0));
    r.lengths_ = zeros(total);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        auto block = bourbaki_cartan(factors[k].type, factors[k].rank);
        std::size_t o = r.offsets_[k];
        for (int i = 0; i < factors[k].rank; ++i) {
            r.factor_of_.push_back(k);
            for (int j = 0; j < factors[k].rank; ++j) r.cartan_[o + i][o + j] = block[i][j];
        }
        // c_ij L_i = c_ji L_j along the connected diagram
        std::vector<bool> seen(factors[k].rank, false);
        std::vector<int> stack{0};
        r.lengths_[o] = 1;
        seen[0] = true;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < factors[k].rank; ++j) {
                if (seen[j] || block[i][j] == 0) continue;
                r.lengths_[o + j] = Q(block[i][j]) * r.lengths_[o + i] / Q(block[j][i]);
                seen[j] = true;
                stack.push_back(j);
            }
        }
        Q mx = 0;
        for (int i = 0; i < factors[k].rank; ++i) mx = std::max(mx, r.lengths_[o + i]);
        for (int i = 0; i < factors[k].rank; ++i) r.lengths_[o + i] *= Q(2) / mx;
    }
    r.cartan_q_.assign(total, zeros(total));
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) r.cartan_q_[i][j] = r.cartan_[i][j];
    r.cartan_inv_ = total ? *inverse(r.cartan_q_) : Mat{};

    std::set<std::vector<long>> all;
    std::vector<std::vector<long>> layer;
    for (std::size_t i = 0; i < total; ++i) {
        std::vector<long> e(total, 0);
        e[i] = 1;
        layer.push_back(e);
        all.insert(e);
    }
    std::vector<std::vector<long>> ordered;
    while (!layer.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& b : layer) {
            ordered.push_back(b);
            for (std::size_t i = 0; i < total; ++i) {
                long pairing = 0;
                for (std::size_t j = 0; j < total; ++j) pairing += b[j] * r.cartan_[i][j];
                std::vector<long> down = b;
                long p = 0;
                while (true) {
                    down[i] -= 1;
                    if (!all.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    std::vector<long> up = b;
                    up[i] += 1;
                    if (all.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    for (const auto& b : ordered) {
        Vec v;
        for (long x : b) v.emplace_back(x);
        r.positive_.push_back(v);
        r.positive_fund_.push_back(r.root_to_fund(v));
    }
    std::size_t expect = 0;
    for (const auto& f : factors) expect += expected_positive_root_count(f.type, f.rank);
    if (expect != r.positive_.size())
        throw std::logic_error("positive root closure produced wrong count for " + r.spec());
    return r;
}

RootSystem RootSystem::parse(const std::string& spec) {
    std::vector<Factor> fs;
    std::size_t i = 0;
    while (i < spec.size()) {
        char t = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[i])));
        if (t < 'A' || t > 'G') throw std::invalid_argument("bad root system spec '" + spec + "'");
        ++i;
        std::size_t j = i;
        while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad root system spec '" + spec + "'");
        fs.push_back({t, std::stoi(spec.substr(i, j - i))});
        i = j;
        if (i < spec.size()) {
            if (spec[i] != 'x' && spec[i] != 'X' && spec[i] != '*')
                throw std::invalid_argument("bad root system spec '" + spec + "'");
            ++i;
        }
    }
    if (fs.empty()) throw std::invalid_argument("empty root system spec");
    return build(fs);
}

std::string RootSystem::spec() const {
    std::string s;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) s += "x";
        s += factors_[k].type + std::to_string(factors_[k].rank);
    }
    return s;
}

std::string RootSystem::root_name(std::size_t i) const {
    std::size_t k = factor_of(i);
    return "α" + std::string(k, '\'') + std::to_string(i - offsets_[k] + 1);
}

std::string RootSystem::weight_name(std::size_t i) const {
    std::size_t k = factor_of(i);
    return "ω" + std::string(k, '\'') + std::to_string(i - offsets_[k] + 1);
}

Vec RootSystem::simple_root(std::size_t i) const {
    Vec v(rank());
    for (std::size_t j = 0; j < rank(); ++j) v[j] = cartan_[j][i];
    return v;
}

Vec RootSystem::root_to_fund(const Vec& v) const {
    if (v.size() != rank()) throw std::invalid_argument("weight has wrong length");
    return mat_vec(cartan_q_, v);
}

Vec RootSystem::fund_to_root(const Vec& v) const {
    if (v.size() != rank()) throw std::invalid_argument("weight has wrong length");
    return mat_vec(cartan_inv_, v);
}

Vec RootSystem::to_fund(const Weight& w) const {
    return w.basis == Basis::Fundamental ? w.coords : root_to_fund(w.coords);
}

Vec RootSystem::to_root(const Weight& w) const {
    return w.basis == Basis::Root ? w.coords : fund_to_root(w.coords);
}

Q RootSystem::inner(const Vec& a, const Vec& b) const {
    Vec br = fund_to_root(b);
    Q s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += a[j] * br[j] * lengths_[j] / 2;
    return s;
}

std::vector<std::size_t> RootSystem::dual_permutation() const {
    std::vector<std::size_t> p(rank());
    for (std::size_t i = 0; i < rank(); ++i) p[i] = i;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        std::size_t o = offsets_[k];
        int n = factors_[k].rank;
        switch (factors_[k].type) {
            case 'A':
                for (int i = 0; i < n; ++i) p[o + i] = o + (n - 1 - i);
                break;
            case 'D':
                if (n % 2 == 1) std::swap(p[o + n - 2], p[o + n - 1]);
                break;
            case 'E':
                if (n == 6) {
                    std::swap(p[o + 0], p[o + 5]);
                    std::swap(p[o + 2], p[o + 4]);
                }
                break;
            default: break;
        }
    }
    return p;
}

Q pair(const RootSystem& r, const Weight& w, std::size_t i) {
    if (i >= r.rank()) throw std::out_of_range("simple root index out of range");
    if (w.coords.size() != r.rank()) throw std::invalid_argument("weight has wrong length");
    if (w.basis == Basis::Fundamental) return w.coords[i];
    Q s = 0;
    for (std::size_t j = 0; j < r.rank(); ++j) s += Q(r.cartan(i, j)) * w.coords[j];
    return s;
}

bool dominance_leq(const RootSystem& r, const Vec& lambda, const Vec& mu) {
    Vec d = r.fund_to_root(mu - lambda);
    for (const auto& x : d)
        if (!is_integer(x) || x < 0) return false;
    return true;
}

bool is_dominant_integral(const Vec& lambda) {
    for (const auto& x : lambda)
        if (!is_integer(x) || x < 0) return false;
    return true;
}

Z weyl_dimension(const RootSystem& r, const Vec& lambda) {
    if (lambda.size() != r.rank()) throw std::invalid_argument("weight has wrong length");
    if (!is_dominant_integral(lambda))
        throw std::invalid_argument("weyl_dimension needs a dominant integral weight");
    Vec rho(r.rank(), Q(1));
    Vec lr = lambda + rho;
    Q d = 1;
    for (const auto& b : r.positive_roots_fund()) d *= r.inner(lr, b) / r.inner(rho, b);
    if (!is_integer(d)) throw std::logic_error("non-integral Weyl dimension");
    return d.get_num();
}

Vec parse_label_expr(const std::string& raw, const std::vector<std::string>& labels) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    Vec v = zeros(labels.size());
    if (s.empty()) throw std::invalid_argument("empty expression");
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        Q sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (any) {
            throw std::invalid_argument("bad expression '" + raw + "'");
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        any = true;
        if (term.empty()) throw std::invalid_argument("bad expression '" + raw + "'");
        Q coef = 1;
        std::string label = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coef = parse_rational(term.substr(0, star));
            label = term.substr(star + 1);
        } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            Q c = parse_rational(term);
            if (c != 0) throw std::invalid_argument("bare constant in '" + raw + "'");
            continue;
        }
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw std::invalid_argument("unknown label '" + label + "' in '" + raw + "'");
        v[it - labels.begin()] += sign * coef;
    }
    return v;
}

std::string format_label_expr(const Vec& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Q c = v[i];
        if (c < 0) {
            out += "-";
            c = -c;
        } else if (!out.empty()) {
            out += "+";
        }
        if (c != 1) out += c.get_str() + "*";
        out += labels.at(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace ewm
