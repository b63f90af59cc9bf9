#pragma once

// Neumaier-compensated accumulation for complex series. The q-series here
// can have partial sums several orders of magnitude above the final value
// at complex arguments; compensation keeps the rounding error at
// eps * max|term| instead of eps * n * max|partial sum|.

#include <cmath>
#include <complex>

namespace qmlf::detail {

class CompensatedSum {
  public:
    void add(std::complex<double> x) {
        add_part(sr_, cr_, x.real());
        add_part(si_, ci_, x.imag());
    }

    std::complex<double> value() const { return {sr_ + cr_, si_ + ci_}; }

  private:
    static void add_part(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }

    double sr_ = 0.0, cr_ = 0.0;
    double si_ = 0.0, ci_ = 0.0;
};

} // namespace qmlf::detail
