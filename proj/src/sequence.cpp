#include "rseq/sequence.hpp"

#include <stdexcept>

namespace rseq {

namespace {

Polynomial variable_poly(Var v) {
    return Polynomial(v, {Rational(), Rational(1)});
}

// p / var, defined when the constant term vanishes.
Polynomial shift_down(const Polynomial& p) {
    if (!p.coeff(0).is_zero())
        throw std::runtime_error("sequence: numerator not divisible by the variable");
    const auto& c = p.coeffs();
    if (c.empty()) return Polynomial(p.var());
    return Polynomial(p.var(), std::vector<Rational>(c.begin() + 1, c.end()));
}

}  // namespace

RationalFunction apply_integral_operator(const RationalFunction& f) {
    if (!f.is_polynomial())
        throw std::invalid_argument("apply_integral_operator: expects a polynomial entry");
    return RationalFunction(weighted_integral(f.numerator()));
}

RationalFunction apply_diff_operator_lambda(const RationalFunction& f) {
    if (f.var() != Var::lambda)
        throw std::invalid_argument("apply_diff_operator_lambda: expects the lambda variable");
    return f.derivative().times(variable_poly(Var::lambda)).times_base_power(-1);
}

RationalFunction apply_diff_operator_zeta(const RationalFunction& f) {
    if (f.var() != Var::zeta)
        throw std::invalid_argument("apply_diff_operator_zeta: expects the zeta variable");
    return f.derivative().times(variable_poly(Var::zeta)).times_base_power(2);
}

RationalFunction closed_form_lambda(int m) {
    if (m >= 1) {
        std::vector<Rational> c(m + 1);
        for (int k = 1; k <= m; ++k) {
            Rational v = g_rec(m, k);
            c[k] = k % 2 == 1 ? v : -v;
        }
        return RationalFunction(Polynomial(Var::lambda, std::move(c)));
    }
    const int mu = -m;
    std::vector<Rational> num(mu == 0 ? 2 : mu + 1);
    if (mu == 0) {
        num[1] = Rational(1);
    } else {
        for (int k = 0; k <= mu - 1; ++k) num[k + 1] = Rational(eulerian2(mu, k));
    }
    return RationalFunction(Polynomial(Var::lambda, std::move(num)), 2L * mu + 1);
}

RationalFunction closed_form_zeta(int m) {
    if (m >= 1) {
        std::vector<Rational> c(m + 1);
        for (int k = 1; k <= m; ++k) c[k] = h_rec(m, k);
        return RationalFunction(Polynomial(Var::zeta, std::move(c)), m);
    }
    const int mu = -m;
    if (mu == 0) return RationalFunction(variable_poly(Var::zeta));
    std::vector<Rational> factor(mu);
    for (int k = 1; k <= mu; ++k) factor[k - 1] = Rational(stirling2_assoc(mu + k, k));
    Polynomial num = variable_poly(Var::zeta) *
                     pow(RationalFunction::base_poly(Var::zeta), mu + 1) *
                     Polynomial(Var::zeta, std::move(factor));
    return RationalFunction(std::move(num));
}

SequenceEntry SequenceBuilder::build(int m) const {
    if (m > bound_ || m < -bound_)
        throw std::domain_error("SequenceBuilder: |m| exceeds the configured bound");
    std::lock_guard<std::mutex> lock(mu_);
    return build_locked(m);
}

SequenceEntry SequenceBuilder::build_locked(int m) const {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;

    RationalFunction lam = RationalFunction::zero(Var::lambda);
    if (m == 1) {
        lam = RationalFunction(variable_poly(Var::lambda));
    } else if (m > 1) {
        lam = apply_integral_operator(build_locked(m - 1).lambda_form);
    } else {
        lam = apply_diff_operator_lambda(build_locked(m + 1).lambda_form);
    }
    RationalFunction zeta = mobius_substitute(lam, MobiusDirection::lambda_to_zeta);

    if (!(lam == closed_form_lambda(m)) || !(zeta == closed_form_zeta(m)))
        throw std::logic_error("SequenceBuilder: operator chain disagrees with closed forms");

    SequenceEntry entry{m, std::move(lam), std::move(zeta)};
    return cache_.emplace(m, entry).first->second;
}

RowExtraction extract_row(const SequenceEntry& entry, Var var) {
    const int m = entry.m;
    const RationalFunction& f = var == Var::lambda ? entry.lambda_form : entry.zeta_form;
    auto bad = [&](const char* why) {
        return std::runtime_error(std::string("extract_row: ") + why);
    };

    if (var == Var::lambda) {
        if (m >= 1) {
            if (f.power() != 0 || f.numerator().degree() != m || !f.numerator().coeff(0).is_zero())
                throw bad("lambda form not in the polynomial canonical shape");
            RowExtraction out{TriangleRule::g, {}};
            for (int k = 1; k <= m; ++k) {
                Rational v = f.numerator().coeff(k);
                if (k % 2 == 0) v = -v;
                if (v != g_rec(m, k)) throw bad("lambda row disagrees with the g triangle");
                out.values.push_back(v);
            }
            return out;
        }
        const int mu = -m;
        if (f.power() != 2L * mu + 1) throw bad("lambda form has the wrong base power");
        Polynomial p = shift_down(f.numerator());
        const int len = mu == 0 ? 1 : mu;
        if (p.degree() != len - 1) throw bad("lambda numerator has the wrong degree");
        RowExtraction out{TriangleRule::eulerian2, {}};
        for (int k = 0; k < len; ++k) {
            Rational v = p.coeff(k);
            if (!v.is_integer() || v != Rational(eulerian2(mu, k)))
                throw bad("lambda row disagrees with the second-order Eulerian triangle");
            out.values.push_back(v);
        }
        return out;
    }

    if (m >= 1) {
        if (f.power() != m || f.numerator().degree() != m || !f.numerator().coeff(0).is_zero())
            throw bad("zeta form not in the (1+zeta)^-m canonical shape");
        RowExtraction out{TriangleRule::h, {}};
        for (int k = 1; k <= m; ++k) {
            Rational v = f.numerator().coeff(k);
            if (v != h_rec(m, k)) throw bad("zeta row disagrees with the h triangle");
            out.values.push_back(v);
        }
        return out;
    }
    const int mu = -m;
    if (f.power() != 0) throw bad("zeta form for m <= 0 must be a polynomial");
    if (mu == 0) {
        if (!(f.numerator() == variable_poly(Var::zeta))) throw bad("zeta form for m = 0 must be zeta");
        return RowExtraction{TriangleRule::stirling2_assoc, {Rational(1)}};
    }
    Polynomial factor = shift_down(f.numerator());
    for (int i = 0; i < mu + 1; ++i) {
        Polynomial q(Var::zeta);
        if (!divide_by_base(factor, q)) throw bad("zeta numerator lacks the (1+zeta)^(|m|+1) factor");
        factor = q;
    }
    if (factor.degree() != mu - 1) throw bad("zeta factor has the wrong degree");
    RowExtraction out{TriangleRule::stirling2_assoc, {}};
    for (int j = 0; j < mu; ++j) {
        Rational v = factor.coeff(j);
        if (!v.is_integer() || v != Rational(stirling2_assoc(mu + j + 1, j + 1)))
            throw bad("zeta row disagrees with the associated Stirling triangle");
        out.values.push_back(v);
    }
    return out;
}

namespace {

// One term of a rendered sum: sign handled by the caller, magnitude
// juxtaposed with the variable, fractions parenthesized, unit magnitude
// omitted for positive powers. Matches the appendix layout.
std::string term_str(const Rational& magnitude, const char* vname, int power) {
    std::string s;
    if (power == 0) {
        s = magnitude.str();
    } else {
        if (magnitude != Rational(1)) {
            s = magnitude.is_integer() ? magnitude.str() : "(" + magnitude.str() + ")";
        }
        s += vname;
        if (power >= 2) s += "^" + std::to_string(power);
    }
    return s;
}

std::string poly_str(const Polynomial& p, bool descending) {
    if (p.is_zero()) return "0";
    const char* vname = var_name(p.var());
    std::string s;
    const int d = p.degree();
    for (int i = 0; i <= d; ++i) {
        const int k = descending ? d - i : i;
        const Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? "-" : "+";
        }
        s += term_str(abs(c), vname, k);
    }
    return s;
}

std::string base_power_str(Var v, long power) {
    std::string s = v == Var::lambda ? "/(1-lambda)" : "/(1+zeta)";
    if (power >= 2) s += "^" + std::to_string(power);
    return s;
}

}  // namespace

std::string render_text(const SequenceEntry& entry, Var var) {
    const RationalFunction& f = var == Var::lambda ? entry.lambda_form : entry.zeta_form;
    std::string label = var == Var::lambda ? "G" : "H";
    label += entry.m < 0 ? "_{" + std::to_string(entry.m) + "}" : "_" + std::to_string(entry.m);
    label += " = ";

    const char* vname = var_name(var);
    if (var == Var::lambda && entry.m >= 1) {
        return label + poly_str(f.numerator(), /*descending=*/true);
    }
    if (var == Var::zeta && entry.m <= -1) {
        // zeta (1+zeta)^(|m|+1) (factor)
        Polynomial factor = shift_down(f.numerator());
        int mult = 0;
        Polynomial q(Var::zeta);
        while (divide_by_base(factor, q)) {
            factor = q;
            ++mult;
        }
        std::string s = label + vname + "(1+zeta)^" + std::to_string(mult);
        if (!(factor == Polynomial::constant(Var::zeta, Rational(1))))
            s += "(" + poly_str(factor, false) + ")";
        return s;
    }
    // Remaining shapes: zeta * inner / base^power (inner possibly 1), and
    // the plain polynomials G_1, H_0.
    Polynomial inner = shift_down(f.numerator());
    std::string s = label + vname;
    if (!(inner == Polynomial::constant(f.var(), Rational(1))))
        s += "(" + poly_str(inner, false) + ")";
    if (f.power() > 0) s += base_power_str(var, f.power());
    return s;
}

}  // namespace rseq
