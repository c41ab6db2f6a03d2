#pragma once

#include "rinehart/convolution.hpp"
#include "rinehart/finite_dual.hpp"
#include "rinehart/linalg.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rinehart {

/// Class in (A (x) A)/K^{n+1} in displacement coordinates: the table maps
/// gamma in N^k to the coefficient of h^gamma, h_j = 1 (x) x_j - x_j (x) 1,
/// with the left leg kept exact.
class Jet {
public:
    Jet(PresentationPtr pres, int precision, EnvTerms table = {})
        : pres_(std::move(pres)), precision_(precision), table_(std::move(table)) {}

    static Jet zero(const PresentationPtr& p, int n) { return Jet(p, n); }
    static Jet displacement(const PresentationPtr& p, int n, int j) {  // h_{j+1}, 0-based j
        Jet out(p, n);
        out.add(mi_unit(p->vars(), j), p->poly_one());
        return out;
    }
    static Jet monomial(const PresentationPtr& p, int n, const MultiIndex& gamma,
                        const Poly& c) {
        Jet out(p, n);
        out.add(gamma, c);
        return out;
    }

    const PresentationPtr& pres() const { return pres_; }
    int precision() const { return precision_; }
    const EnvTerms& table() const { return table_; }

    Poly coeff(const MultiIndex& gamma) const {
        auto it = table_.find(gamma);
        return it == table_.end() ? pres_->poly_zero() : it->second;
    }

    void add(const MultiIndex& gamma, const Poly& c) {
        if (mi_degree(gamma) > precision_ || c.is_zero()) return;
        auto [it, inserted] = table_.emplace(gamma, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) table_.erase(it);
        }
    }

    friend bool operator==(const Jet& a, const Jet& b) {
        return a.pres_.get() == b.pres_.get() && a.precision_ == b.precision_ &&
               a.table_ == b.table_;
    }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

private:
    PresentationPtr pres_;
    int precision_;
    EnvTerms table_;
};

/// Taylor expansion of a' (x) a: a' . (d^gamma a / gamma!) on h^gamma,
/// exact for polynomial a since the truncation absorbs the tail.
inline Jet jet_from_tensor(const PresentationPtr& p, const Poly& aPrime, const Poly& a,
                           int n) {
    Jet out(p, n);
    for (auto& gamma : monomials_up_to(p->vars(), n)) {
        Poly d = a;
        Rational fact(1);
        for (int j = 0; j < p->vars() && !d.is_zero(); ++j)
            for (std::uint32_t rep = 0; rep < gamma[j]; ++rep) {
                d = d.partial(j);
                fact *= Rational(static_cast<long>(rep + 1));
            }
        if (d.is_zero()) continue;
        out.add(gamma, aPrime * d * (Rational(1) / fact));
    }
    return out;
}

/// h-graded product truncated at the minimum precision.
inline Jet jet_mul(const Jet& a, const Jet& b) {
    check_same(a.pres(), b.pres());
    Jet out(a.pres(), std::min(a.precision(), b.precision()));
    for (auto& [g1, c1] : a.table())
        for (auto& [g2, c2] : b.table()) out.add(mi_add(g1, g2), c1 * c2);
    return out;
}

namespace detail {

/// Convolution powers of theta(h_j), memoized per presentation, direction
/// and precision; write-once under the lock.
inline const TruncatedFunctional& theta_direction_power(const PresentationPtr& p, int dir,
                                                        std::uint32_t power, int m) {
    using Key = std::tuple<const Presentation*, int, std::uint32_t, int>;
    static std::map<Key, TruncatedFunctional> cache;
    static std::mutex mutex;
    Key key{p.get(), dir, power, m};
    std::lock_guard<std::mutex> lk(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TruncatedFunctional value = TruncatedFunctional::counit(p, m);
    if (power > 0) {
        Poly xj = Poly::variable(p->vars(), dir + 1);
        TruncatedFunctional h = truncate(vartheta(p, p->poly_one(), xj), m) -
                                truncate(vartheta(p, xj, p->poly_one()), m);
        const TruncatedFunctional& prev = theta_direction_power(p, dir, power - 1, m);
        value = convolve(prev, h);
    }
    return cache.emplace(key, std::move(value)).first->second;
}

inline TruncatedFunctional theta_h_power(const PresentationPtr& p, const MultiIndex& gamma,
                                         int m) {
    TruncatedFunctional acc = TruncatedFunctional::counit(p, m);
    for (int j = 0; j < static_cast<int>(gamma.size()); ++j) {
        if (gamma[j] == 0) continue;
        acc = convolve(acc, theta_direction_power(p, j, gamma[j], m));
    }
    return acc;
}

} // namespace detail

/// The jets-to-convolution leg: sum_gamma theta(a'_gamma (x) 1) *
/// theta(h)^gamma truncated at m.
inline TruncatedFunctional jet_to_functional(const Jet& j, int m) {
    const auto& p = j.pres();
    TruncatedFunctional out = TruncatedFunctional::zero(p, m);
    for (auto& [gamma, c] : j.table()) {
        TruncatedFunctional part =
            convolve(truncate(vartheta(p, c, p->poly_one()), m),
                     detail::theta_h_power(p, gamma, m));
        out += part;
    }
    return out;
}

inline void require_coordinate_presentation(const PresentationPtr& p) {
    if (p->rank() != p->vars())
        throw ValidationError("jets duality needs rank equal to the variable count");
    for (int i = 0; i < p->rank(); ++i)
        for (int j = 0; j < p->vars(); ++j) {
            Poly want = i == j ? p->poly_one() : p->poly_zero();
            if (p->anchor(i).component(j) != want)
                throw ValidationError(
                    "jets duality needs the coordinate anchors w(X_i) = d/dx_i");
        }
}

/// Level-n duality matrix M[gamma][alpha] = theta_hat(h^gamma)(X^alpha)
/// and its exact determinant; a unit determinant certifies level-n
/// bijectivity of theta_hat. Requires L = Der(A) in coordinates.
inline std::pair<PolyMatrix, Poly> theta_matrix(const PresentationPtr& p, int n) {
    require_coordinate_presentation(p);
    auto hs = monomials_up_to(p->vars(), n);
    auto xs = monomials_up_to(p->rank(), n);
    PolyMatrix m(static_cast<int>(hs.size()), static_cast<int>(xs.size()), p->vars());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        TruncatedFunctional f = detail::theta_h_power(p, hs[i], n);
        for (std::size_t j = 0; j < xs.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = f.value(xs[j]);
    }
    return {m, bareiss_det(m)};
}

/// zeta(eta(a' (x) a)) = theta(a' (x) a) at precision m: the commuting
/// triangle of the main diagram.
inline bool eta_triangle_check(const PresentationPtr& p, const Poly& aPrime, const Poly& a,
                               int m) {
    TruncatedFunctional lhs = truncate(zeta(eta_elem(p, aPrime, a)), m);
    TruncatedFunctional rhs = truncate(vartheta(p, aPrime, a), m);
    return lhs == rhs;
}

} // namespace rinehart
