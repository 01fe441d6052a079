#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace grmir {

// Exponent vector of a Laurent monomial. Slot order: boxes in canonical
// (col,row) order, then z1, then z2.
using ExpVec = Eigen::Matrix<std::int32_t, Eigen::Dynamic, 1>;

// Strict weak order: shorter first, then lexicographic.
struct ExpVecLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

inline ExpVec zero_exp(int arity) { return ExpVec::Zero(arity); }

}  // namespace grmir
