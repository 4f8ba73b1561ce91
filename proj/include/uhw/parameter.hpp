#pragma once

#include <string>
#include <vector>

#include "uhw/errors.hpp"
#include "uhw/half_integer.hpp"

namespace uhw {

// su(p,q) with p <= q, or so*(2n). Every parameter carries its algebra tag;
// cross-algebra operations are rejected rather than coerced.
class Algebra {
public:
    enum class Kind { Su, SoStar };

    static Algebra su(int p, int q) {
        if (p < 1 || q < 1) throw InvalidArgument("su(p,q) requires positive p and q");
        if (p > q)
            throw InvalidArgument("su(p,q) requires p <= q (swap the factors); got p=" +
                                  std::to_string(p) + ", q=" + std::to_string(q));
        return Algebra(Kind::Su, p, q, p + q);
    }

    static Algebra so_star(int n) {
        if (n < 2) throw InvalidArgument("so*(2n) requires n >= 2");
        return Algebra(Kind::SoStar, 0, 0, n);
    }

    Kind kind() const { return kind_; }
    bool is_su() const { return kind_ == Kind::Su; }
    bool is_so_star() const { return kind_ == Kind::SoStar; }
    int p() const { return p_; }
    int q() const { return q_; }
    int rank() const { return rank_; }

    std::string str() const {
        if (is_su()) return "su(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
        return "so*(" + std::to_string(2 * rank_) + ")";
    }

    bool operator==(const Algebra&) const = default;

private:
    Algebra(Kind kind, int p, int q, int rank) : kind_(kind), p_(p), q_(q), rank_(rank) {}

    Kind kind_;
    int p_, q_;
    int rank_;
};

// An algebra-tagged coordinate sequence. Used for both highest weights and
// parameters; the classifiers check integrality where they need it.
struct Parameter {
    Algebra algebra;
    std::vector<HalfInteger> coords;

    Parameter(Algebra alg, std::vector<HalfInteger> cs) : algebra(alg), coords(std::move(cs)) {
        if (static_cast<int>(coords.size()) != algebra.rank())
            throw InvalidArgument("expected " + std::to_string(algebra.rank()) +
                                  " coordinates for " + algebra.str() + ", got " +
                                  std::to_string(coords.size()));
    }

    bool operator==(const Parameter&) const = default;
};

// Half sum of positive roots in standard coordinates:
// su(p,q): ((n-1)/2, (n-3)/2, ..., -(n-1)/2); so*(2n): (n-1, n-2, ..., 0).
inline Parameter rho(const Algebra& algebra) {
    int n = algebra.rank();
    std::vector<HalfInteger> coords;
    coords.reserve(n);
    if (algebra.is_su()) {
        for (int i = 0; i < n; ++i) coords.push_back(HalfInteger::from_twice(n - 1 - 2 * i));
    } else {
        for (int i = 0; i < n; ++i) coords.push_back(HalfInteger(n - 1 - i));
    }
    return Parameter(algebra, std::move(coords));
}

// Lambda = lambda + rho.
inline Parameter to_parameter(const Parameter& highest_weight) {
    Parameter result = highest_weight;
    Parameter r = rho(highest_weight.algebra);
    for (std::size_t i = 0; i < result.coords.size(); ++i) result.coords[i] += r.coords[i];
    return result;
}

// lambda = Lambda - rho.
inline Parameter from_parameter(const Parameter& parameter) {
    Parameter result = parameter;
    Parameter r = rho(parameter.algebra);
    for (std::size_t i = 0; i < result.coords.size(); ++i) result.coords[i] -= r.coords[i];
    return result;
}

enum class IntegralityClass { Integer, HalfOdd };

inline std::string str(IntegralityClass c) {
    return c == IntegralityClass::Integer ? "integer" : "half-odd";
}

// For so*: all coordinates integers, or all half-odd; anything mixed is
// outside the classifiers' scope. For su only differences matter, so the
// same uniform-parity test applies and the common parity is reported
// together with whatever absolute offset the input carries.
inline IntegralityClass integrality_class_of(const std::vector<HalfInteger>& coords) {
    if (coords.empty()) return IntegralityClass::Integer;
    bool first_odd = !coords.front().is_integer();
    for (const HalfInteger& c : coords) {
        if (c.is_integer() == first_odd)
            throw NotIntegralError("mixed integer/half-odd coordinates in " +
                                   format_coordinates(coords));
    }
    return first_odd ? IntegralityClass::HalfOdd : IntegralityClass::Integer;
}

inline IntegralityClass integrality_class(const Parameter& parameter) {
    return integrality_class_of(parameter.coords);
}

}  // namespace uhw
