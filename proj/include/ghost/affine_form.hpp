#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ghost/rational.hpp"

namespace ghost {

// Render order for affine forms.  Weight strings in the tables lead with the
// constant ("10+2a1"); entry bounds and filter conditions lead with the
// variables ("a2-1", "-a1-4").
enum class RenderStyle { VariableFirst, ConstantFirst };

// Affine expression  constant + sum_i coeff_i * a_i + c_coeff * c  over the
// highest-weight coordinates a_1..a_l and the central character c.  This is
// the symbolic currency of the whole pipeline: weights, cohomological
// degrees, and filter left-hand sides are all affine in (a, c).
class AffineForm {
public:
    AffineForm() = default;
    explicit AffineForm(std::size_t nvars) : a_coeff_(nvars, 0) {}
    AffineForm(std::size_t nvars, Rational constant) : constant_(constant), a_coeff_(nvars, 0) {}

    static AffineForm constant(std::size_t nvars, Rational value) {
        return AffineForm(nvars, value);
    }

    // The basis form a_{index} (0-based index into a_1..a_l).
    static AffineForm variable(std::size_t nvars, std::size_t index) {
        AffineForm f(nvars);
        f.a_coeff_.at(index) = 1;
        return f;
    }

    static AffineForm central(std::size_t nvars) {
        AffineForm f(nvars);
        f.c_coeff_ = 1;
        return f;
    }

    std::size_t nvars() const { return a_coeff_.size(); }
    const Rational& constant_term() const { return constant_; }
    long long coeff(std::size_t i) const { return a_coeff_.at(i); }
    long long c_coeff() const { return c_coeff_; }

    bool is_constant() const {
        if (c_coeff_ != 0) return false;
        for (long long v : a_coeff_)
            if (v != 0) return false;
        return true;
    }

    AffineForm operator-() const {
        AffineForm f = *this;
        f.constant_ = -f.constant_;
        for (auto& v : f.a_coeff_) v = -v;
        f.c_coeff_ = -f.c_coeff_;
        return f;
    }

    friend AffineForm operator+(const AffineForm& x, const AffineForm& y) {
        AffineForm f = x;
        f.constant_ += y.constant_;
        f.require_same_arity(y);
        for (std::size_t i = 0; i < f.a_coeff_.size(); ++i) f.a_coeff_[i] += y.a_coeff_[i];
        f.c_coeff_ += y.c_coeff_;
        return f;
    }

    friend AffineForm operator-(const AffineForm& x, const AffineForm& y) { return x + (-y); }

    friend AffineForm operator*(const Rational& s, const AffineForm& x) {
        // Variable coefficients must stay integral; scalar multiples used in
        // the pipeline (half-sums come pre-divided, weight doubling, sign
        // flips) never break this.
        AffineForm f = x;
        f.constant_ *= s;
        for (auto& v : f.a_coeff_) {
            Rational scaled = s * Rational(v);
            v = scaled.as_integer();
        }
        Rational sc = s * Rational(f.c_coeff_);
        f.c_coeff_ = sc.as_integer();
        return f;
    }

    AffineForm& operator+=(const AffineForm& o) { return *this = *this + o; }
    AffineForm& operator-=(const AffineForm& o) { return *this = *this - o; }

    friend bool operator==(const AffineForm& x, const AffineForm& y) {
        return x.constant_ == y.constant_ && x.a_coeff_ == y.a_coeff_ && x.c_coeff_ == y.c_coeff_;
    }
    friend bool operator!=(const AffineForm& x, const AffineForm& y) { return !(x == y); }

    Rational evaluate(const std::vector<long long>& a, long long c) const {
        Rational r = constant_;
        for (std::size_t i = 0; i < a_coeff_.size(); ++i)
            r += Rational(a_coeff_[i]) * Rational(a.at(i));
        r += Rational(c_coeff_) * Rational(c);
        return r;
    }

    // Substitute pinned variables (index -> value), dropping them into the
    // constant term.  Used to reduce offset expressions once the survival
    // condition pins coordinates.
    AffineForm substitute(const std::map<std::size_t, long long>& pins) const {
        AffineForm f = *this;
        for (const auto& [idx, val] : pins) {
            f.constant_ += Rational(f.a_coeff_.at(idx)) * Rational(val);
            f.a_coeff_[idx] = 0;
        }
        return f;
    }

    std::string render(RenderStyle style) const {
        std::ostringstream os;
        bool wrote = false;
        auto term = [&](const std::string& body, bool negative) {
            if (!wrote) {
                if (negative) os << '-';
            } else {
                os << (negative ? '-' : '+');
            }
            os << body;
            wrote = true;
        };
        auto write_constant = [&]() {
            if (constant_ == Rational(0)) return;
            Rational abs = constant_.sign() < 0 ? -constant_ : constant_;
            term(abs.str(), constant_.sign() < 0);
        };
        auto write_linear = [&]() {
            for (std::size_t i = 0; i < a_coeff_.size(); ++i) {
                long long v = a_coeff_[i];
                if (v == 0) continue;
                long long mag = v < 0 ? -v : v;
                std::string body = (mag == 1 ? "" : std::to_string(mag)) + "a" + std::to_string(i + 1);
                term(body, v < 0);
            }
            if (c_coeff_ != 0) {
                long long mag = c_coeff_ < 0 ? -c_coeff_ : c_coeff_;
                term((mag == 1 ? "" : std::to_string(mag)) + "c", c_coeff_ < 0);
            }
        };
        if (style == RenderStyle::ConstantFirst) {
            write_constant();
            write_linear();
        } else {
            write_linear();
            write_constant();
        }
        if (!wrote) return "0";
        return os.str();
    }

private:
    void require_same_arity(const AffineForm& o) const {
        if (a_coeff_.size() != o.a_coeff_.size())
            throw std::logic_error("affine form arity mismatch");
    }

    Rational constant_;
    std::vector<long long> a_coeff_;
    long long c_coeff_ = 0;
};

}  // namespace ghost
