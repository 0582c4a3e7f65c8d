#include "subframe/spectral/basis.hpp"

#include <cmath>

namespace subframe::spectral {

namespace {
constexpr double kFourPi = 4.0 * 3.14159265358979323846;
}

std::size_t SpectralBasis::col_offset(int m) const {
    // column m holds entries for l = m..l_max: offset = sum_{k<m} (l_max+1-k)
    const std::size_t mm = static_cast<std::size_t>(m);
    return mm * (l_max_ + 1) - mm * (mm - 1) / 2;
}

SpectralBasis::SpectralBasis(int l_max, Measure measure) : l_max_(l_max), measure_(measure) {
    if (l_max < 0) throw_config("SpectralBasis: l_max must be >= 0");
    if (l_max > kHardCap)
        throw_capacity("SpectralBasis: l_max " + std::to_string(l_max) +
                       " exceeds the stable-recurrence cap " + std::to_string(kHardCap));
    scale_ = (measure == Measure::normalized) ? 1.0 : 1.0 / std::sqrt(kFourPi);

    const std::size_t ncoef = col_offset(l_max_) + 1;
    rec_a_.assign(ncoef, 0.0);
    rec_b_.assign(ncoef, 0.0);
    for (int m = 0; m <= l_max_; ++m) {
        const std::size_t base = col_offset(m);
        for (int l = m + 2; l <= l_max_; ++l) {
            const double num_a = (2.0 * l - 1.0) * (2.0 * l + 1.0);
            const double den = (static_cast<double>(l) - m) * (static_cast<double>(l) + m);
            rec_a_[base + (l - m)] = std::sqrt(num_a / den);
            const double num_b =
                (2.0 * l + 1.0) * (l - 1.0 - m) * (l - 1.0 + m);
            rec_b_[base + (l - m)] = std::sqrt(num_b / ((2.0 * l - 3.0) * den));
        }
    }
    sectoral_.assign(static_cast<std::size_t>(l_max_) + 1, 0.0);
    for (int m = 1; m <= l_max_; ++m)
        sectoral_[m] = std::sqrt((2.0 * m + 1.0) / (2.0 * m));
}

double SpectralBasis::total_measure() const {
    return measure_ == Measure::normalized ? 1.0 : kFourPi;
}

void SpectralBasis::legendre_column(int m, double x, double s, std::span<double> out) const {
    // Q_m^m by the sectoral chain, then the normalized three-term recurrence.
    double pmm = scale_;
    for (int k = 1; k <= m; ++k) pmm *= sectoral_[k] * s;
    const std::size_t base = col_offset(m);
    out[0] = pmm;
    if (m == l_max_) return;
    double prev2 = pmm;
    double prev1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
    out[1] = prev1;
    for (int l = m + 2; l <= l_max_; ++l) {
        const double cur = rec_a_[base + (l - m)] * x * prev1 - rec_b_[base + (l - m)] * prev2;
        out[l - m] = cur;
        prev2 = prev1;
        prev1 = cur;
    }
}

void SpectralBasis::eval_row(double x, double s, double phi, std::span<double> out) const {
    const int L = l_max_;
    std::vector<double> col(static_cast<std::size_t>(L) + 1);
    const double sqrt2 = std::sqrt(2.0);
    const double cp = std::cos(phi), sp = std::sin(phi);
    double cm = 1.0, sm = 0.0;  // cos(m phi), sin(m phi), advanced by rotation
    for (int m = 0; m <= L; ++m) {
        legendre_column(m, x, s, std::span<double>(col.data(), static_cast<std::size_t>(L - m + 1)));
        if (m == 0) {
            for (int l = 0; l <= L; ++l) out[flat_index(l, 0)] = col[l];
        } else {
            const double tc = sqrt2 * cm, ts = sqrt2 * sm;
            for (int l = m; l <= L; ++l) {
                const double q = col[l - m];
                out[flat_index(l, m)] = q * tc;
                out[flat_index(l, -m)] = q * ts;
            }
        }
        const double cn = cm * cp - sm * sp;
        sm = sm * cp + cm * sp;
        cm = cn;
    }
}

void SpectralBasis::eval_row(const Point& p, std::span<double> out) const {
    const double x = p.z;
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    const double phi = std::atan2(p.y, p.x);
    eval_row(x, s, phi, out);
}

double SpectralBasis::eval_one(int l, int m, const Point& p) const {
    const double x = p.z;
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    const double phi = std::atan2(p.y, p.x);
    const int am = std::abs(m);
    std::vector<double> col(static_cast<std::size_t>(l_max_ - am) + 1);
    legendre_column(am, x, s, col);
    const double q = col[l - am];
    if (m == 0) return q;
    const double t = std::sqrt(2.0) * (m > 0 ? std::cos(am * phi) : std::sin(am * phi));
    return q * t;
}

}  // namespace subframe::spectral
