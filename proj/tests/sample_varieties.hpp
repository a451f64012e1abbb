#pragma once

// Input data shared by the unit and acceptance tests.

#include "acx/arrangement.hpp"

namespace samples {

using namespace acx;

inline RatMatrix standard_A(int c) {
  // columns e_1, ..., e_{c+1}, -(1,...,1)
  RatMatrix A(c + 1, c + 2);
  for (int i = 0; i <= c; ++i) {
    A(i, i) = 1;
    A(i, c + 1) = -1;
  }
  return A;
}

/// Threefold of complexity two with relation T01*T02^2 + T11^2 + T21^2 + T31^4.
inline GavData threefold() {
  GavData d;
  d.c = 2;
  d.r = 3;
  d.s = 1;
  d.n = {2, 1, 1, 1};
  d.m = 0;
  d.l = {{1, 2}, {2}, {2}, {4}};
  d.A = standard_A(2);
  d.P = IntMatrix{{-1, -2, 2, 0, 0}, {-1, -2, 0, 2, 0}, {-1, -2, 0, 0, 4}, {-1, -3, 1, 1, 1}};
  return d;
}

/// The same data with its Gorenstein Fano fan.
inline GavData threefold_with_fan() {
  GavData d = threefold();
  d.sigma_max = std::vector<std::vector<std::size_t>>{{0, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
  return d;
}

/// Complexity one surface-like example with a non-log-terminal P-elementary cone.
inline GavData unbounded() {
  GavData d;
  d.c = 1;
  d.r = 2;
  d.s = 1;
  d.n = {1, 1, 1};
  d.m = 0;
  d.l = {{3}, {4}, {4}};
  d.A = RatMatrix{{1, 0, -1}, {0, 1, -1}};
  d.P = IntMatrix{{-3, 4, 0}, {-3, 0, 4}, {1, 1, 1}};
  d.sigma_max = std::vector<std::vector<std::size_t>>{{0, 1, 2}};
  return d;
}

/// The projective plane written with r = c = 1, s = 1.
inline GavData projective_plane() {
  GavData d;
  d.c = 1;
  d.r = 1;
  d.s = 1;
  d.n = {1, 1};
  d.m = 1;
  d.l = {{1}, {1}};
  d.A = RatMatrix{{1, 0}, {0, 1}};
  d.P = IntMatrix{{-1, 1, 0}, {-1, 0, 1}};
  d.sigma_max = std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {0, 2}};
  return d;
}

/// Hirzebruch surface F_3 (not Fano), r = c = 1, s = 1.
inline GavData hirzebruch3() {
  GavData d;
  d.c = 1;
  d.r = 1;
  d.s = 1;
  d.n = {1, 1};
  d.m = 2;
  d.l = {{1}, {1}};
  d.A = RatMatrix{{1, 0}, {0, 1}};
  d.P = IntMatrix{{-1, 1, 0, 0}, {3, 0, 1, -1}};
  d.sigma_max = std::vector<std::vector<std::size_t>>{{1, 2}, {2, 0}, {0, 3}, {3, 1}};
  return d;
}

}  // namespace samples
