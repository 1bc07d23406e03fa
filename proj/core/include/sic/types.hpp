#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sic {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline Vector uniform_simplex(Eigen::Index d) {
    if (d < 1) throw std::invalid_argument("uniform_simplex: d must be >= 1");
    return Vector::Constant(d, 1.0 / static_cast<double>(d));
}

/// Throws unless eta is strictly positive and sums to 1 (within float slack).
inline void check_open_simplex(const Vector& eta, const char* where) {
    if (eta.size() == 0) {
        throw std::invalid_argument(std::string(where) + ": eta is empty");
    }
    double sum = 0.0;
    for (Eigen::Index j = 0; j < eta.size(); ++j) {
        if (!(eta[j] > 0.0)) {
            throw std::invalid_argument(std::string(where) + ": eta[" + std::to_string(j) +
                                        "] = " + std::to_string(eta[j]) +
                                        " is not strictly positive");
        }
        sum += eta[j];
    }
    if (std::abs(sum - 1.0) > 1e-8) {
        throw std::invalid_argument(std::string(where) + ": eta sums to " +
                                    std::to_string(sum) + ", expected 1");
    }
}

/// Softmax with max-subtraction; exponents are floored so every output stays > 0.
inline Vector stable_softmax(const Vector& logits) {
    const double top = logits.maxCoeff();
    Vector out(logits.size());
    for (Eigen::Index j = 0; j < logits.size(); ++j) {
        out[j] = std::exp(std::max(logits[j] - top, -700.0));
    }
    out /= out.sum();
    return out;
}

}  // namespace sic
