#pragma once

#include <stdexcept>
#include <string>

#include "curvex/rat.hpp"

namespace curvex {

// A curvature index: a finite exact rational or the distinguished value
// Infinite. Finite(0) is exactly the distance exceptional case. Addition
// follows the extended-real convention used by the product and coalescence
// laws: Infinite absorbs.
class IndexValue {
  public:
    IndexValue() : finite_(true), value_(0) {}
    static IndexValue finite(Rat v) {
        IndexValue iv;
        iv.finite_ = true;
        iv.value_ = std::move(v);
        return iv;
    }
    static IndexValue infinite() {
        IndexValue iv;
        iv.finite_ = false;
        iv.value_ = 0;
        return iv;
    }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }
    bool is_zero() const { return finite_ && value_ == 0; }

    const Rat& value() const {
        if (!finite_) throw std::logic_error("value() on infinite index");
        return value_;
    }

    // Index values always print with an explicit denominator ("0/1", "-2/1"),
    // or "inf"; plain rationals elsewhere use rat_str.
    std::string str() const { return finite_ ? rat_fraction_str(value_) : "inf"; }

    static IndexValue parse(std::string_view s) {
        if (s == "inf") return infinite();
        return finite(parse_rat(s));
    }

    friend bool operator==(const IndexValue& a, const IndexValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const IndexValue& a, const IndexValue& b) { return !(a == b); }

    friend IndexValue operator+(const IndexValue& a, const IndexValue& b) {
        if (!a.finite_ || !b.finite_) return infinite();
        return finite(a.value_ + b.value_);
    }

  private:
    bool finite_;
    Rat value_;
};

}  // namespace curvex
