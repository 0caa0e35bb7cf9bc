#include "ewm/oracle.hpp"

#include "ewm/linalg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace ewm {

namespace {

std::vector<IWeight> simple_roots_fund(const RootSystem& r) {
    std::vector<IWeight> out(r.rank(), IWeight(r.rank()));
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j) out[i][j] = r.cartan(j, i);
    return out;
}

Mat gram(const RootSystem& r) {
    Mat g(r.rank(), zeros(r.rank()));
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j) g[i][j] = r.inner(unit(r.rank(), i), unit(r.rank(), j));
    return g;
}

Q form(const Mat& g, const IWeight& a, const IWeight& b) {
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += g[i][j] * (a[i] * b[j]);
    }
    return s;
}

Q height(const RootSystem& r, const Vec& fund) {
    Q h = 0;
    for (const auto& x : r.fund_to_root(fund)) h += x;
    return h;
}

IWeight sub(IWeight a, const IWeight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

bool dominant(const IWeight& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
}

}  // namespace

long long CharacterTable::total() const {
    long long t = 0;
    for (const auto& [w, m] : entries) t += m;
    return t;
}

IWeight dominant_conjugate(const RootSystem& r, IWeight v) {
    auto alpha = simple_roots_fund(r);
    while (true) {
        std::size_t i = 0;
        while (i < v.size() && v[i] >= 0) ++i;
        if (i == v.size()) return v;
        long c = v[i];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * alpha[i][j];
    }
}

std::map<IWeight, long long> dominant_multiplicities(const RootSystem& r, const IWeight& lambda,
                                                     std::size_t rank_cap) {
    if (r.rank() > rank_cap) throw OracleError("rank " + std::to_string(r.rank()) + " exceeds the oracle cap");
    if (lambda.size() != r.rank() || !dominant(lambda)) throw OracleError("highest weight must be dominant");
    std::vector<IWeight> pos;
    for (const auto& b : r.positive_roots_fund()) pos.push_back(to_longs(b));

    std::set<IWeight> seen{lambda};
    std::deque<IWeight> queue{lambda};
    while (!queue.empty()) {
        IWeight mu = queue.front();
        queue.pop_front();
        for (const auto& b : pos) {
            IWeight nu = sub(mu, b);
            if (dominant(nu) && seen.insert(nu).second) queue.push_back(nu);
        }
    }
    std::vector<std::pair<Q, IWeight>> order;
    for (const auto& mu : seen) order.push_back({height(r, from_ints(sub(lambda, mu))), mu});
    std::sort(order.begin(), order.end());

    Mat g = gram(r);
    auto shifted = [&](const IWeight& v) {
        IWeight s = v;
        for (auto& x : s) x += 1;
        return form(g, s, s);
    };
    const Q top = shifted(lambda);
    std::map<IWeight, long long> mult{{lambda, 1}};
    for (const auto& [h, mu] : order) {
        if (mu == lambda) continue;
        Q sum = 0;
        for (const auto& b : pos) {
            IWeight nu = mu;
            while (true) {
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += b[i];
                auto it = mult.find(dominant_conjugate(r, nu));
                if (it == mult.end()) break;
                sum += form(g, nu, b) * Q(static_cast<long>(it->second));
            }
        }
        Q m = 2 * sum / (top - shifted(mu));
        if (!is_integer(m) || m <= 0) throw std::logic_error("non-integral multiplicity");
        mult[mu] = m.get_num().get_si();
    }
    return mult;
}

CharacterTable freudenthal(const RootSystem& r, const IWeight& lambda, std::size_t rank_cap) {
    auto dom = dominant_multiplicities(r, lambda, rank_cap);
    auto alpha = simple_roots_fund(r);
    CharacterTable t;
    for (const auto& [mu, m] : dom) {
        std::set<IWeight> orbit{mu};
        std::deque<IWeight> queue{mu};
        while (!queue.empty()) {
            IWeight v = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0) continue;
                IWeight s = v;
                for (std::size_t j = 0; j < v.size(); ++j) s[j] -= v[i] * alpha[i][j];
                if (orbit.insert(s).second) queue.push_back(s);
            }
        }
        for (const auto& v : orbit) t.entries[v] = m;
    }
    return t;
}

std::size_t BranchingSetup::central_dim() const {
    if (torus_map.empty()) return 0;
    return torus_map[0].size() - h.rank();
}

Vec BranchingSetup::restrict(const IWeight& w) const {
    Vec out = zeros(dim());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) out += Q(w[i]) * torus_map.at(i);
    return out;
}

Vec BranchingSetup::chi_to_oracle(const Vec& chi) const {
    if (chi_map.empty()) {
        if (chi.size() != dim()) throw OracleError("character dimension differs from the oracle coordinates");
        return chi;
    }
    return mat_vec(chi_map, chi);
}

const CharacterTable& Brancher::h_character(const IWeight& mu) {
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(mu, freudenthal(setup_.h, mu)).first->second;
}

Branching Brancher::operator()(const IWeight& lambda) {
    const auto& s = setup_;
    const std::size_t hr = s.h.rank();
    std::map<Vec, long long> rest;
    for (const auto& [w, m] : freudenthal(s.g, lambda).entries) rest[s.restrict(w)] += m;
    Branching out;
    std::size_t guard = rest.size() + 1;
    while (true) {
        for (auto it = rest.begin(); it != rest.end();)
            it = it->second == 0 ? rest.erase(it) : std::next(it);
        if (rest.empty()) break;
        if (guard-- == 0) throw OracleError("branching loop did not terminate");
        const Vec* best = nullptr;
        Q best_h;
        for (const auto& [w, m] : rest) {
            Q ht = height(s.h, Vec(w.begin(), w.begin() + hr));
            if (!best || ht > best_h || (ht == best_h && w > *best)) {
                best = &w;
                best_h = ht;
            }
        }
        Vec top = *best;
        long long m = rest[top];
        Vec hpart(top.begin(), top.begin() + hr);
        if (!is_integral(hpart) || !dominant(to_longs(hpart)))
            throw OracleError("restricted weight " + to_string(top) + " is not H-dominant");
        if (m < 0) throw OracleError("negative multiplicity at " + to_string(top));
        out[top] = m;
        for (const auto& [mu, k] : h_character(to_longs(hpart)).entries) {
            Vec key = from_ints(mu);
            key.insert(key.end(), top.begin() + hr, top.end());
            long long& slot = rest[key];
            slot -= m * k;
            if (slot < 0) throw OracleError("negative multiplicity at " + to_string(key));
        }
    }
    return out;
}

Branching branch(const BranchingSetup& s, const IWeight& lambda) {
    Brancher b(s);
    return b(lambda);
}

long long well_membership_oracle(const BranchingSetup& s, const IWeight& lambda, const Vec& chi_oracle) {
    auto br = branch(s, lambda);
    auto it = br.find(chi_oracle);
    return it == br.end() ? 0 : it->second;
}

std::vector<IWeight> dominant_weights_up_to(std::size_t rank, long bound) {
    std::vector<IWeight> out;
    IWeight w(rank, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
        if (k == rank) {
            out.push_back(w);
            return;
        }
        for (long c = 0; c <= left; ++c) {
            w[k] = c;
            rec(k + 1, left - c);
        }
        w[k] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

CrosscheckReport crosscheck(const BranchingSetup& s, const WellCase& w, const Vec& chi, long bound) {
    CrosscheckReport rep;
    const std::size_t hr = s.h.rank();
    Vec chi_o = s.chi_to_oracle(chi);
    auto extends = [&](const Vec& v) {
        return std::all_of(s.p_levi.begin(), s.p_levi.end(), [&](std::size_t i) { return v.at(i) == 0; });
    };
    Vec chi_p = chi;
    std::vector<std::size_t> gperm;
    if (!extends(chi_o)) {
        auto hperm = s.h.dual_permutation();
        Vec dual = zeros(chi_o.size());
        for (std::size_t i = 0; i < hr; ++i) dual[hperm[i]] = chi_o[i];
        for (std::size_t i = hr; i < chi_o.size(); ++i) dual[i] = -chi_o[i];
        std::optional<Vec> back;
        if (extends(dual)) back = s.chi_map.empty() ? std::optional<Vec>(dual) : solve(s.chi_map, dual);
        if (!back) {
            rep.skipped = true;
            return rep;
        }
        rep.dual = true;
        chi_p = *back;
        gperm = s.g.dual_permutation();
    }
    Brancher br(s);
    for (const auto& lam : dominant_weights_up_to(s.g.rank(), bound)) {
        IWeight target = lam;
        if (rep.dual)
            for (std::size_t i = 0; i < lam.size(); ++i) target[gperm[i]] = lam[i];
        bool predicted = membership(w.table, from_ints(target), -chi_p).has_value();
        auto table = br(lam);
        auto it = table.find(chi_o);
        long long m = it == table.end() ? 0 : it->second;
        ++rep.checked;
        if (m >= 2) rep.high_multiplicity.push_back({lam, predicted, m});
        if (predicted != (m == 1)) rep.mismatches.push_back({lam, predicted, m});
    }
    return rep;
}

}  // namespace ewm
