#include "rittkit/funcfield.hpp"

#include <cassert>

namespace rittkit {

const RatFun& Specialization::image_of(const std::string& symbol) const {
    auto it = images.find(symbol);
    if (it == images.end())
        throw SpecializationDomainError("specialization undefined on '" + symbol + "'");
    return it->second;
}

RingPtr specialization_target(const RingPtr& ring, int n_params) {
    return RingConfig::make(ring->n_derivations(), ring->main_vars(),
                            CoeffField::rational_functions(n_params));
}

namespace {

// phi(theta u) = the theta-derivative of phi(u) in Q(t_bar); derivations
// beyond the parameter count act as zero.
RatFun specialize_var(const DiffVar& v, const std::string& name, const Specialization& phi) {
    RatFun img = phi.image_of(name);
    for (size_t i = 0; i < v.exps.size(); ++i) {
        for (int k = 0; k < v.exps[i]; ++k) {
            if (static_cast<int>(i) < img.nvars())
                img = img.derivative(static_cast<int>(i));
            else
                img = RatFun(img.nvars());
        }
    }
    return img;
}

}  // namespace

DiffPoly apply_specialization(const DiffPoly& f, const Specialization& phi, const RingPtr& target) {
    assert(target->field().kind == FieldKind::RationalFunctions);
    assert(target->field().n_params() == phi.n_params);
    const RingConfig& src = *f.ring();
    DiffPoly out(target);
    for (const auto& [m, c] : f.terms()) {
        Monomial kept;
        RatFun scale = RatFun::constant(phi.n_params, Rat(1));
        for (const auto& [v, e] : m.factors()) {
            const std::string& name = src.base_name(v);
            if (phi.images.count(name)) {
                RatFun img = specialize_var(v, name, phi);
                for (int k = 0; k < e; ++k) scale = scale * img;
            } else if (auto w = target->find_var(name)) {
                w->exps = v.exps;
                kept = kept.times(Monomial::power(*w, e));
            } else {
                throw SpecializationDomainError("specialization undefined on '" + name + "'");
            }
        }
        if (c.holds_modp())
            throw UnsupportedCharacteristicError("specialization requires characteristic 0");
        RatFun base = c.holds_ratfun() ? c.as_ratfun() : RatFun::constant(phi.n_params, c.as_rat());
        out.add_term(kept, Coeff::rat_fun(base * scale));
    }
    return out;
}

RatFun wronskian(const std::vector<RatFun>& fs) {
    if (fs.empty()) throw EmptyInputError("wronskian of an empty tuple");
    const int n = static_cast<int>(fs.size());
    for (const RatFun& f : fs)
        if (f.nvars() != 1)
            throw UnsupportedError("wronskian requires rational functions of a single parameter");

    // Successive derivatives; entry (i, j) = d^i f_j / dt^i.
    std::vector<std::vector<RatFun>> w(n, std::vector<RatFun>(n, RatFun(1)));
    for (int j = 0; j < n; ++j) {
        w[0][j] = fs[j];
        for (int i = 1; i < n; ++i) w[i][j] = w[i - 1][j].derivative(0);
    }

    // Clear each column to polynomial entries; det picks up 1/prod(D_j).
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(1)));
    MPoly denom = MPoly::constant(1, Rat(1));
    for (int j = 0; j < n; ++j) {
        MPoly col_den = MPoly::constant(1, Rat(1));
        for (int i = 0; i < n; ++i) col_den = col_den * w[i][j].den();
        denom = denom * col_den;
        for (int i = 0; i < n; ++i) {
            MPoly scaled(1);
            bool ok = MPoly::try_divide(col_den, w[i][j].den(), scaled);
            assert(ok);
            (void)ok;
            m[i][j] = w[i][j].num() * scaled;
        }
    }

    // Bareiss fraction-free elimination; every division is exact.
    int sign = 1;
    MPoly prev = MPoly::constant(1, Rat(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return RatFun(1);  // singular: determinant 0
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                MPoly q(1);
                bool ok = MPoly::try_divide(num, prev, q);
                assert(ok);
                (void)ok;
                m[i][j] = q;
            }
            m[i][k] = MPoly(1);
        }
        prev = m[k][k];
    }

    MPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return RatFun(std::move(det), std::move(denom));  // the single final division
}

}  // namespace rittkit
