#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qorbit/scalar.hpp"
#include "qorbit/varset.hpp"

namespace qorbit {

/// Term shape x^powers * exp(freqs . x); the coefficient lives in the map value.
struct Monomial {
    std::vector<std::uint32_t> powers;
    std::vector<Scalar> freqs;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: higher monomial degrees first (so `p*exp(q)` prints
/// before its correction terms), frequencies as tie break.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.powers != b.powers) return a.powers > b.powers;
        for (size_t i = 0; i < a.freqs.size(); ++i)
            if (a.freqs[i] != b.freqs[i]) return scalar_less(a.freqs[i], b.freqs[i]);
        return false;
    }
};

/// Exact exponential polynomial: a finite sum of
///   coeff * prod_i x_i^{a_i} * exp(sum_i lambda_i x_i)
/// with Gaussian-rational coefficients and frequencies.
///
/// Closed under +, *, d/dx_i and (where the exponential factor stays
/// Gaussian-rational) the substitution x_i -> x_i + a. Zero-coefficient terms
/// are never stored, so equal values have identical term maps.
class ExpPoly {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    ExpPoly() = default;
    explicit ExpPoly(VarSet vs) : vars_(std::move(vs)) {}

    static ExpPoly constant(const VarSet& vs, Scalar c);
    static ExpPoly variable(const VarSet& vs, std::string_view name);
    /// exp(freqs . x)
    static ExpPoly exponential(const VarSet& vs, std::vector<Scalar> freqs);
    static ExpPoly term(const VarSet& vs, Monomial m, Scalar c);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Constant value if the expression is a plain constant.
    std::optional<Scalar> constant_value() const;

    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a) { return a.scaled(Scalar(-1)); }

    ExpPoly scaled(const Scalar& c) const;

    /// Exact d/dvar.
    ExpPoly partial(std::string_view var) const;
    ExpPoly partial(size_t var_idx) const;

    /// Exact substitution var -> var + a, or nullopt when some term would pick
    /// up a non-Gaussian-rational factor exp(lambda*a); such shifts stay as
    /// shift offsets inside DiffOperator instead of being folded here.
    std::optional<ExpPoly> shifted(size_t var_idx, const Scalar& a) const;
    std::optional<ExpPoly> shifted(std::string_view var, const Scalar& a) const;

    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    std::uint32_t degree_in(size_t var_idx) const;
    bool has_frequency_in(size_t var_idx) const;

    friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

private:
    void add_term(Monomial m, Scalar c);
    void check_same_vars(const ExpPoly& o) const;

    VarSet vars_;
    TermMap terms_;
};

/// cos(var) and sin(var) as complex-exponential combinations.
ExpPoly cos_of(const VarSet& vs, std::string_view var);
ExpPoly sin_of(const VarSet& vs, std::string_view var);

} // namespace qorbit
