#pragma once

#include "shc/liecore/matrix_group.hpp"

namespace shc {

template <typename T>
struct MaurerCartan {
  Matrix<T> theta;      // g^-1 v
  Matrix<T> theta_bar;  // v g^-1
  Matrix<T> beta;       // (theta + theta_bar) / 2
};

// Unchecked version shared by the form kernels; g_inv is g^-1.
template <typename T>
MaurerCartan<T> maurer_cartan_with_inverse(const Matrix<T>& g_inv, const Matrix<T>& v) {
  MaurerCartan<T> mc;
  mc.theta = g_inv * v;
  mc.theta_bar = v * g_inv;
  T half = scalar_from(Rational(1, 2), scalar_context(v.data()));
  mc.beta = (mc.theta + mc.theta_bar) * half;
  return mc;
}

MaurerCartan<Rational> maurer_cartan(const MatrixGroup& g, const Matrix<Rational>& point,
                                     const Matrix<Rational>& v);

// v_x(g) = x g - g x, the velocity of h g h^-1 along h = exp(t x).
template <typename T>
Matrix<T> conjugation_field(const Matrix<T>& x, const Matrix<T>& g) {
  return x * g - g * x;
}

}  // namespace shc
