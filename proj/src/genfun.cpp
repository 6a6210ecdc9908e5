#include "charpoly/genfun.hpp"

#include "charpoly/errors.hpp"
#include "charpoly/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace charpoly {

namespace {

void check_bounds(const GenfunBounds& b) {
    if (b.l < 0 || b.m < 0 || b.l > 3 || b.m > 3 || b.max_exponent < 0 || b.max_exponent > 8 ||
        b.alpha_max < 0 || b.alpha_max > 6)
        throw FeasibilityError("verify_genfun: bounds exceed the supported budget");
}

Rational constant_of(const Polynomial& p) {
    if (p.is_zero()) return Rational();
    if (p.terms().size() != 1 || !p.terms().begin()->first.is_constant())
        throw std::logic_error("genfun: series coefficient is not constant");
    return p.terms().begin()->second;
}

// (1 - c * x^exps)^{-1} truncated to the shape; exps must not be all zero.
Series geometric_factor(const Series& shape, const std::vector<int>& exps, const Rational& c) {
    bool nonzero = std::any_of(exps.begin(), exps.end(), [](int x) { return x > 0; });
    if (!nonzero) throw std::logic_error("geometric_factor: constant exponent vector");
    Series s(shape.num_vars(), shape.per_var_bound(), shape.total_bound());
    std::vector<int> e(shape.num_vars(), 0);
    Rational ck(1);
    while (s.within_bounds(e)) {
        s.add_term(e, Polynomial(ck));
        for (int v = 0; v < shape.num_vars(); ++v) e[v] += exps[v];
        ck *= c;
    }
    return s;
}

// 1 + c * x^exps.
Series linear_factor(const Series& shape, const std::vector<int>& exps, const Rational& c) {
    Series s = Series::one(shape.num_vars(), shape.per_var_bound(), shape.total_bound());
    s.add_term(exps, Polynomial(c));
    return s;
}

// All vectors in {0..bound}^len in odometer order.
std::vector<std::vector<int>> exponent_box(int len, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < len && cur[i] == bound) cur[i++] = 0;
        if (i == len) break;
        ++cur[i];
    }
    if (len == 0) out = {{}};
    return out;
}

std::string tuple_name(const char* var, const std::vector<int>& v) {
    std::ostringstream os;
    os << var << "=(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// Moment profiles of H/E products over a bounded grid, built once with
// incremental products; cells are independent, so the outer loop may run
// in parallel with deterministic results.
class GridProfiles {
public:
    GridProfiles(int h_count, int e_count, int bound, int jobs) {
        std::vector<std::vector<int>> h_keys = sorted_multisets(h_count, bound);
        keys_per_h_.resize(h_keys.size());
        auto e_keys = sorted_multisets(e_count, bound);
        int hn = static_cast<int>(h_keys.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
#endif
        for (int i = 0; i < hn; ++i) {
            Polynomial base = h_product(h_keys[i]);
            auto& slot = keys_per_h_[i];
            slot.reserve(e_keys.size());
            for (const auto& e : e_keys)
                slot.emplace_back(e, moment_profile(base * e_product(e)));
        }
        (void)jobs;
        for (int i = 0; i < hn; ++i)
            for (auto& [e, prof] : keys_per_h_[i])
                profiles_.emplace(std::make_pair(h_keys[i], e), std::move(prof));
    }

    // parts may contain zeros and be unsorted.
    const std::vector<Rational>& at(std::vector<int> h, std::vector<int> e) const {
        std::erase(h, 0);
        std::erase(e, 0);
        std::sort(h.begin(), h.end());
        std::sort(e.begin(), e.end());
        auto it = profiles_.find(std::make_pair(h, e));
        if (it == profiles_.end()) throw std::logic_error("GridProfiles: missing key");
        return it->second;
    }

    static Rational moment_from(const std::vector<Rational>& profile, int n) {
        return profile[std::min<std::size_t>(n, profile.size() - 1)];
    }
    static const Rational& stable_from(const std::vector<Rational>& profile) {
        return profile.back();
    }

private:
    static std::vector<std::vector<int>> sorted_multisets(int count, int bound) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int remaining, int min_part) -> void {
            out.push_back(cur);
            if (remaining == 0) return;
            for (int p = min_part; p <= bound; ++p) {
                cur.push_back(p);
                self(self, remaining - 1, p);
                cur.pop_back();
            }
        };
        rec(rec, count, 1);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<std::vector<std::pair<std::vector<int>, std::vector<Rational>>>> keys_per_h_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Rational>> profiles_;
};

CheckResult check_binomial_moments(const GenfunBounds& b) {
    CheckResult res("binomial_moments");
    int B = b.max_exponent;
    for (const Partition& alpha : partitions_up_to(b.alpha_max)) {
        // RHS: v^{|alpha|}/z_alpha * (1 - v)^{-1}.
        Series shape(1, {B});
        Series rhs = geometric_factor(shape, {1}, 1);
        Series shift(1, {B});
        shift.add_term({alpha.size()}, Polynomial(Rational(BigInt(1), z_alpha(alpha))));
        rhs = rhs * shift;
        auto profile = moment_profile(binom_elem(alpha));
        for (int n = 0; n <= B; ++n) {
            Rational lhs = GridProfiles::moment_from(profile, n);
            Rational r = constant_of(rhs.coeff({n}));
            ++res.checked;
            if (!(lhs == r))
                res.record_failure(tuple_name("alpha", alpha.parts()) + " v^" +
                                   std::to_string(n) + ": moment " + lhs.str() +
                                   " vs series " + r.str());
        }
    }
    return res;
}

CheckResult check_hmomgen(const GenfunBounds& b, int jobs) {
    CheckResult res("hmomgen");
    int l = b.l, B = b.max_exponent;
    int nv = l + 1;  // t_1..t_l, v
    std::vector<int> bounds(nv, B);
    Series acc = Series::one(nv, bounds);
    for (const auto& r : exponent_box(l, B)) {
        std::vector<int> exps = r;
        exps.push_back(1);  // v
        acc = acc * geometric_factor(acc, exps, 1);
    }
    GridProfiles grid(l, 0, B, jobs);
    for (const auto& lambda : exponent_box(l, B)) {
        const auto& profile = grid.at(lambda, {});
        for (int n = 0; n <= B; ++n) {
            std::vector<int> key = lambda;
            key.push_back(n);
            Rational lhs = GridProfiles::moment_from(profile, n);
            Rational rhs = constant_of(acc.coeff(key));
            ++res.checked;
            if (!(lhs == rhs))
                res.record_failure(tuple_name("t", lambda) + " v^" + std::to_string(n) +
                                   ": moment " + lhs.str() + " vs series " + rhs.str());
        }
    }
    return res;
}

CheckResult check_he(const GenfunBounds& b, int jobs) {
    CheckResult res("he");
    int B = b.max_exponent;
    Series acc = Series::one(2, {B, B});  // t, u
    for (int k = 0; k <= B; ++k) acc = acc * linear_factor(acc, {k, 1}, 1);
    for (int k = 1; k <= B; ++k) acc = acc * geometric_factor(acc, {k, 0}, 1);
    GridProfiles grid(1, 1, B, jobs);
    for (int i = 0; i <= B; ++i)
        for (int j = 0; j <= B; ++j) {
            Rational lhs = GridProfiles::stable_from(grid.at({i}, {j}));
            Rational rhs = constant_of(acc.coeff({i, j}));
            ++res.checked;
            if (!(lhs == rhs))
                res.record_failure("t^" + std::to_string(i) + " u^" + std::to_string(j) +
                                   ": moment " + lhs.str() + " vs series " + rhs.str());
        }
    return res;
}

// Shared product side of Theorem-style identities over (R, S) factor pairs.
// with_v: append the extra v variable (coefficientwise moments at each n);
// otherwise stable moments and the (R,S) = (empty,empty) factor is skipped.
CheckResult check_hlamu_like(const GenfunBounds& b, bool with_v, int jobs) {
    CheckResult res(with_v ? "hlaemu" : "hlamu");
    int l = b.l, m = b.m, B = b.max_exponent;
    int nv = l + m + (with_v ? 1 : 0);
    std::vector<int> bounds(nv, B);
    Series acc = Series::one(nv, bounds);
    for (const auto& r : exponent_box(l, B)) {
        for (unsigned smask = 0; smask < (1u << m); ++smask) {
            bool r_empty = std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
            if (!with_v && r_empty && smask == 0) continue;
            std::vector<int> exps = r;
            int scount = 0;
            for (int s = 0; s < m; ++s) {
                int bit = (smask >> s) & 1;
                exps.push_back(bit);
                scount += bit;
            }
            if (with_v) exps.push_back(1);
            if (scount % 2 == 0)
                acc = acc * geometric_factor(acc, exps, 1);
            else
                acc = acc * linear_factor(acc, exps, 1);
        }
    }
    GridProfiles grid(l, m, B, jobs);
    for (const auto& lambda : exponent_box(l, B))
        for (const auto& mu : exponent_box(m, B)) {
            const auto& profile = grid.at(lambda, mu);
            std::vector<int> key = lambda;
            key.insert(key.end(), mu.begin(), mu.end());
            if (with_v) {
                key.push_back(0);
                for (int n = 0; n <= B; ++n) {
                    key.back() = n;
                    Rational lhs = GridProfiles::moment_from(profile, n);
                    Rational rhs = constant_of(acc.coeff(key));
                    ++res.checked;
                    if (!(lhs == rhs))
                        res.record_failure(tuple_name("t", lambda) + " " + tuple_name("u", mu) +
                                           " v^" + std::to_string(n) + ": moment " + lhs.str() +
                                           " vs series " + rhs.str());
                }
            } else {
                Rational lhs = GridProfiles::stable_from(profile);
                Rational rhs = constant_of(acc.coeff(key));
                ++res.checked;
                if (!(lhs == rhs))
                    res.record_failure(tuple_name("t", lambda) + " " + tuple_name("u", mu) +
                                       ": moment " + lhs.str() + " vs series " + rhs.str());
            }
        }
    return res;
}

}  // namespace

const char* genfun_identity_name(GenfunIdentity id) {
    switch (id) {
        case GenfunIdentity::binomial_moments: return "binomial_moments";
        case GenfunIdentity::hmomgen: return "hmomgen";
        case GenfunIdentity::he: return "he";
        case GenfunIdentity::hlamu: return "hlamu";
        case GenfunIdentity::hlaemu: return "hlaemu";
    }
    return "?";
}

GenfunIdentity parse_genfun_identity(const std::string& name) {
    if (name == "binomial_moments") return GenfunIdentity::binomial_moments;
    if (name == "hmomgen") return GenfunIdentity::hmomgen;
    if (name == "he") return GenfunIdentity::he;
    if (name == "hlamu") return GenfunIdentity::hlamu;
    if (name == "hlaemu") return GenfunIdentity::hlaemu;
    throw std::invalid_argument("unknown generating-function identity: " + name);
}

Report verify_genfun(GenfunIdentity id, const GenfunBounds& bounds, int jobs) {
    check_bounds(bounds);
    Report rep;
    switch (id) {
        case GenfunIdentity::binomial_moments:
            rep.checks.push_back(check_binomial_moments(bounds));
            break;
        case GenfunIdentity::hmomgen: rep.checks.push_back(check_hmomgen(bounds, jobs)); break;
        case GenfunIdentity::he: rep.checks.push_back(check_he(bounds, jobs)); break;
        case GenfunIdentity::hlamu:
            rep.checks.push_back(check_hlamu_like(bounds, false, jobs));
            break;
        case GenfunIdentity::hlaemu:
            rep.checks.push_back(check_hlamu_like(bounds, true, jobs));
            break;
    }
    return rep;
}

Report verify_genfun_all(const GenfunBounds& bounds, int jobs) {
    Report rep;
    for (GenfunIdentity id :
         {GenfunIdentity::binomial_moments, GenfunIdentity::hmomgen, GenfunIdentity::he,
          GenfunIdentity::hlamu, GenfunIdentity::hlaemu})
        rep.merge(verify_genfun(id, bounds, jobs));
    return rep;
}

}  // namespace charpoly
